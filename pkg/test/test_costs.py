import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from resyn.config import ClassCost, OracleConfig
from resyn.costs import *
from resyn.errors import BudgetExceeded
from resyn.regex import matches, parse

string_sets = st.lists(st.text("abc", max_size=4), min_size=1, max_size=3, unique=True)


def test_alignment_two_strings():
    alignment, cost = optimal_alignment(["http", "ftps"])
    assert cost == 6, "http and ftps share tp, so six symbols suffice"
    assert alignment.is_valid()
    assert len(alignment.supersequence()) == 6


def test_alignment_three_strings():
    alignment, cost = optimal_alignment(["bat", "cat", "dog"])
    assert cost == 7
    assert alignment.is_valid()


def test_alignment_single_string():
    alignment, cost = optimal_alignment(["hello"])
    assert cost == 5
    assert alignment.supersequence() == "hello"


def test_alignment_budget():
    with pytest.raises(BudgetExceeded) as info:
        optimal_alignment(["abcabc", "cbacba", "bcabca"], budget=3)
    assert info.value.best_bound == 18, "The concatenation bound should be reported"


def test_decomposition_shares_suffix():
    witness, cost = decomposition_cost(["bat", "cat", "dog"])
    assert cost == 7
    assert set(witness.pieces) == {"b", "c", "at", "dog"}
    assert witness.is_valid()


def test_decomposition_identical_strings():
    witness, cost = decomposition_cost(["abc", "abc"])
    assert cost == 3
    assert witness.pieces == ("abc",)


@pytest.mark.parametrize("pattern, cost", [("a", 1), ("a|ab|ac", 5), ("a(b|c)?", 3), ("(ab)*\\d", 3), ("", 0)])
def test_expression_cost(pattern, cost):
    assert expression_cost(parse(pattern)) == cost


def test_expression_cost_set_size():
    assert expression_cost(parse("[abc]x"), ClassCost.SET_SIZE) == 4
    assert expression_cost(parse("[abc]x")) == 2


@pytest.mark.parametrize("strings, cost", [
    (["apple", "apply"], 6),
    (["a"], 1),
    (["bat", "cat", "dog"], 7),
    (["", "ab"], 2),
])
def test_language_cost(strings, cost):
    result = language_expression_cost(strings)
    assert result.exact
    assert result.cost == cost
    assert expression_cost(result.witness) == cost, "The witness should have the reported cost"


def test_language_cost_witness_accepts():
    strings = ["apple", "apply", "ample"]
    result = language_expression_cost(strings)
    assert all(matches(result.witness, text) for text in strings)


def test_language_cost_over_budget():
    result = language_expression_cost(["abcab", "bcabc", "cabca"], budget=2)
    assert result.cost is None
    assert result.bound == 15


@pytest.mark.parametrize("x, y, length", [("http", "ftps", 6), ("abc", "abc", 3), ("ab", "ba", 3), ("", "ab", 2)])
def test_scs_length(x, y, length):
    assert scs_length(x, y) == length


@pytest.mark.parametrize("x, y, length", [("abcbdab", "bdcaba", 4), ("", "abc", 0), ("abc", "xyz", 0), ("aaa", "aa", 2)])
def test_lcs_length(x, y, length):
    assert lcs_length(x, y) == length


def _is_subsequence(short: str, long: str) -> bool:
    remaining = iter(long)
    return all(char in remaining for char in short)


@settings(deadline=None)
@given(st.text("abc", max_size=6), st.text("abc", max_size=6))
def test_lcs_length_is_longest_shared_subsequence(x, y):
    shared = [
        size for size in range(len(x) + 1)
        for picks in itertools.combinations(range(len(x)), size)
        if _is_subsequence("".join(x[i] for i in picks), y)
    ]
    assert lcs_length(x, y) == max(shared)
    assert lcs_length(x, y) == lcs_length(y, x)


def test_report_unknown_expression():
    report = verify_cost_equalities(["abcab", "bcabc", "cabca"], OracleConfig(expression_budget=2))
    data = report.as_dict()
    assert data["c_lang_expr"] == "unknown"
    assert data["search_budget_exhausted"]
    assert data["c_align"] == data["c_decomp"]


def test_report_witnesses():
    data = verify_cost_equalities(["http", "ftps"]).as_dict()
    assert data["c_align"] == data["c_decomp"] == data["c_lang_expr"] == 6
    assert len(data["alignment"]["supersequence"]) == 6
    assert "expression" in data


@settings(max_examples=200, deadline=None)
@given(string_sets)
def test_cost_equalities(strings):
    report = verify_cost_equalities(strings)
    assert not report.search_budget_exhausted
    assert report.c_align == report.c_decomp == report.c_lang_expr, f"Costs of {strings} disagree"
    assert report.alignment.is_valid()
    assert report.decomposition.is_valid()
    if len(strings) == 2:
        assert report.c_align == scs_length(*strings)


@settings(max_examples=100, deadline=None)
@given(string_sets, st.text("abc", max_size=4))
def test_costs_monotone(strings, extra):
    smaller = optimal_alignment(strings)[1]
    larger = optimal_alignment(strings + [extra])[1]
    assert smaller <= larger, "Adding a string should never make the set cheaper"
    assert larger <= smaller + len(extra)
