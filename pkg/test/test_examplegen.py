import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from resyn.canon import CanonMode, canonicalize
from resyn.config import GenerationConfig
from resyn.errors import CorpusError, InsufficientLanguage, SegmentationFailure
from resyn.exampleset import ExampleSet
from resyn.examplegen import *
from resyn.regex import Literal, matches, parse, serialize


def _gt(pattern: str):
    return canonicalize(parse(pattern, strip_anchors=True), CanonMode.FULL)


def test_sample_case_study_covers_branches():
    gt = _gt("(I{2,10}|V{2,10})[A-Z]{3,4}")
    positives = sample_positives(gt, 4, seed=42)
    assert len(positives) == 4
    assert len(set(positives)) == 4, "Sampled positives should be distinct"
    assert all(matches(gt, text) for text in positives)
    assert any(text.startswith("II") for text in positives), "The I branch should be sampled"
    assert any(text.startswith("VV") for text in positives), "The V branch should be sampled"


def test_sample_singleton_language():
    with pytest.raises(InsufficientLanguage):
        sample_positives(Literal("a"), 2, seed=0)


def test_sample_star_respects_repeat_cap():
    gt = parse("a*")
    positives = sample_positives(gt, 3, seed=1)
    assert len(positives) == 3
    assert all(matches(gt, text) and len(text) <= 20 for text in positives)


def test_sample_deterministic():
    gt = _gt("[a-z]+@\\d{2,4}")
    assert sample_positives(gt, 10, seed=9) == sample_positives(gt, 10, seed=9)


def test_sample_small_language_returns_what_exists():
    positives = sample_positives(_gt("[ab]"), 10, seed=0, config=GenerationConfig(retries=50))
    assert set(positives) == {"a", "b"}


def test_levenshtein():
    assert levenshtein("kitten", "sitting") == 3
    assert levenshtein("", "abc") == 3
    assert levenshtein("same", "same") == 0
    assert levenshtein("flaw", "lawn") == 2
    assert levenshtein("ab", "ba") == 2
    assert levenshtein("abc", "") == 3


@settings(deadline=None)
@given(st.text("ab1", max_size=6), st.text("ab1", max_size=6), st.text("ab1", max_size=6))
def test_levenshtein_is_a_metric(a, b, c):
    distance = levenshtein(a, b)
    assert distance == levenshtein(b, a)
    assert (distance == 0) == (a == b)
    assert abs(len(a) - len(b)) <= distance <= max(len(a), len(b))
    assert levenshtein(a, c) <= distance + levenshtein(b, c)


def test_negatives_of_universal_language():
    sample = mutate_negatives(parse(".*"), ["a"], 5, seed=0, retries=20)
    assert sample.strings == ()
    assert sample.shortfall == 5, "The missing negatives should be reported"


def test_negatives_of_digit():
    gt = parse("\\d")
    sample = mutate_negatives(gt, ["5"], 3, seed=4)
    assert len(sample.strings) == 3
    for negative in sample.strings:
        assert not matches(gt, negative)
        assert levenshtein(negative, "5") == 1, f"{negative!r} should be one edit from the positive"


def test_negatives_respect_exclusions():
    gt = parse("ab")
    first = mutate_negatives(gt, ["ab"], 5, seed=1)
    second = mutate_negatives(gt, ["ab"], 5, seed=1, exclude=first.strings)
    assert not set(first.strings) & set(second.strings)


def _assert_instance_invariants(instance: Instance):
    for examples in (instance.train, instance.holdout):
        assert all(matches(instance.gt, text) for text in examples.positives)
        assert not any(matches(instance.gt, text) for text in examples.negatives)
        for negative in examples.negatives:
            assert any(levenshtein(negative, positive) == 1 for positive in examples.positives), \
                f"{negative!r} should be a hard negative"
    assert not set(instance.train.strings()) & set(instance.holdout.strings()), \
        "Training and held-out strings should never overlap"


@pytest.mark.parametrize("pattern", ["\\d+-\\d+", "(\\d+|[a-z]+)-[A-Z]+", "x-?\\d+", "[a-zA-Z]+"])
def test_build_instance_invariants(pattern):
    instance = build_instance(_gt(pattern), seed=3, instance_id="t")
    _assert_instance_invariants(instance)
    assert len(instance.train.positives) == 10
    assert len(instance.holdout.positives) == 10


def test_build_instance_deterministic():
    gt = _gt("[A-Z][a-z]+ \\d+")
    assert build_instance(gt, seed=17) == build_instance(gt, seed=17)


def test_build_instance_finite_language():
    gt = _gt("(b|c)at|dog")
    instance = build_instance(gt, seed=0)
    assert set(instance.train.positives) <= {"bat", "cat", "dog"}
    assert "dog" in instance.train.positives
    assert {"bat", "cat"} & set(instance.train.positives)
    assert instance.holdout.positives == (), "A three-string language leaves nothing to hold out"
    _assert_instance_invariants(instance)


def test_expand_concat():
    gt = _gt("[a-z]+-\\d+")
    positives = ("ab-12", "x-3")
    expanded = expand_substrings(gt, positives)
    assert len(expanded) == len(gt.children)
    assert [sub.ast for sub in expanded] == list(gt.children)
    assert expanded[0].positives == ("ab", "x")
    assert expanded[1].positives == ("-",)
    assert expanded[2].positives == ("12", "3")


def test_expand_repetition_root():
    assert expand_substrings(_gt("\\d+"), ("1", "22")) == []


def test_expand_union():
    gt = _gt("\\d+|[a-z]+")
    expanded = expand_substrings(gt, ("ab", "12", "cd"))
    assert [sub.positives for sub in expanded] == [("ab", "cd"), ("12",)]
    for sub in expanded:
        assert all(matches(sub.ast, text) for text in sub.positives)


def test_expand_recursive():
    gt = _gt("(\\d+|[a-z]+)-x")
    expanded = expand_substrings(gt, ("12-x", "ab-x"), recursive=True)
    asts = [serialize(sub.ast) for sub in expanded]
    assert asts == ["[a-z]+|\\d+", "\\d+", "[a-z]+", "-x"]


def test_expand_unsplittable():
    with pytest.raises(SegmentationFailure):
        expand_substrings(_gt("\\d+-\\d+"), ("12",))


def test_corpus_round_trip(tmp_path):
    instance = Instance(
        "tab-0",
        _gt("a\\t\\d+"),
        ExampleSet(("a\t1", "a\t22"), ("a1",)),
        ExampleSet(("a\t3",), ("b\t3",)),
    )
    path = tmp_path / "corpus.jsonl"
    assert write_corpus([instance], str(path)) == 1
    assert "\\t" in path.read_text(encoding="utf-8"), "Control characters should be JSON-escaped"
    assert read_corpus(str(path)) == [instance]


def test_corpus_record_fields():
    record = instance_to_record(build_instance(_gt("\\d+"), seed=1, instance_id="r"))
    assert set(record) == {"id", "gt", "positives", "negatives", "holdout_positives", "holdout_negatives"}
    assert record["gt"] == "\\d+"


def test_corpus_bad_line(tmp_path):
    path = tmp_path / "bad.jsonl"
    good = json.dumps(instance_to_record(build_instance(_gt("\\d+"), seed=1)))
    path.write_text(good + "\n\n{not json\n", encoding="utf-8")
    with pytest.raises(CorpusError) as info:
        read_corpus(str(path))
    assert info.value.line == 3


def test_corpus_missing_field(tmp_path):
    path = tmp_path / "missing.jsonl"
    path.write_text(json.dumps({"id": "x", "gt": "a"}) + "\n", encoding="utf-8")
    with pytest.raises(CorpusError):
        read_corpus(str(path))


def test_corpus_missing_file(tmp_path):
    with pytest.raises(CorpusError):
        read_corpus(str(tmp_path / "nowhere.jsonl"))


def test_read_patterns(tmp_path):
    path = tmp_path / "patterns.txt"
    path.write_text("# comment\n\\d+\n\n[a-z] +\n", encoding="utf-8")
    assert read_patterns(str(path)) == ["\\d+", "[a-z] +"]


def test_dedup_by_structure():
    first = build_instance(_gt("ab\\d+"), seed=1, instance_id="1")
    second = build_instance(_gt("xyz\\d+"), seed=2, instance_id="2")
    third = build_instance(_gt("ab\\w+"), seed=3, instance_id="3")
    assert [instance.id for instance in dedup_by_structure([first, second, third])] == ["1", "3"]


