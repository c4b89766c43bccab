import pytest
from hypothesis import given, settings

from resyn.canon import *
from resyn.config import CanonConfig
from resyn.errors import NonTerminationError, TokenExhaustion
from resyn.regex import *

from .regex_strategies import small_regexes


def _canonical(pattern: str, mode: CanonMode = CanonMode.PRESERVING) -> str:
    return serialize(canonicalize(parse(pattern, strip_anchors=mode == CanonMode.FULL), mode))


@pytest.mark.parametrize("pattern, expected", [
    ("[a]", "a"),
    ("a|b", "[ab]"),
    ("a{1,1}", "a"),
    ("az|ab", "a(b|z)"),
    ("a{0}b", "b"),
    ("(ab){2}", "abab"),
    ("a(bc)", "abc"),
    ("b|a(c)", "ac|b"),
    ("(|a|b)", "[ab]?"),
    ("ab|ab", "ab"),
])
def test_rule_examples(pattern, expected):
    assert _canonical(pattern) == expected, f"{pattern!r} should canonicalize to {expected!r}"


def test_quantifier_clip_full_only():
    assert _canonical("a{2,30}", CanonMode.FULL) == "a{2,10}"
    assert _canonical("a{2,30}") == "a{2,30}", "Preserving mode should keep large bounds"
    assert _canonical("a+", CanonMode.FULL) == "a+", "Unbounded repetitions should stay unbounded"


def test_full_mode_strips_anchors():
    assert _canonical("^abc$", CanonMode.FULL) == "abc"


def test_rule_kinds():
    normalizing = {rule.id for rule in RULES if rule.kind == RuleKind.NORMALIZING}
    assert normalizing == {"QuantifierClip", "ClassNegation", "AssertionRemoval", "EngineMode"}


def test_rules_for_modes():
    assert rule_by_id("QuantifierClip") not in rules_for(CanonMode.PRESERVING)
    assert rule_by_id("QuantifierClip") in rules_for(CanonMode.FULL)


def test_trace_counts_rules():
    canonical, trace = trace_canonicalize(parse("a|b"))
    assert canonical == CharClass(frozenset("ab"))
    assert trace.applications["AltToClass"] == 1


@pytest.mark.parametrize("pattern, expected", [
    ("a(b|z)", "a(b|z)"),
    ("(a|b)c", "(a|b)c"),
    ("(a|b)+", "[ab]+"),
    ("a(b|c)?", "a[bc]?"),
    ("()(a|b)", "[ab]"),
])
def test_concatenation_items_keep_their_branches(pattern, expected):
    assert _canonical(pattern) == expected
    assert _canonical(expected) == expected, f"{expected!r} should be a fixed point"


def test_factored_prefix_is_not_merged_into_a_class():
    canonical, trace = trace_canonicalize(parse("az|ab"))
    assert canonical == Concat((Literal("a"), Union((Literal("b"), Literal("z")))))
    assert trace.applications["PrefixFactor"] == 1
    assert trace.applications["AltToClass"] == 0


def test_rule_budget_guard():
    with pytest.raises(NonTerminationError):
        canonicalize(parse("a|b"), config=CanonConfig(rule_budget=0))


def _is_canonical_shape(ast) -> bool:
    for node in walk(ast):
        if isinstance(node, (Concat, Union)) and any(isinstance(child, type(node)) for child in node.children):
            return False
        if isinstance(node, Concat) and any(
                isinstance(a, Literal) and isinstance(b, Literal) for a, b in zip(node.children, node.children[1:])):
            return False
        if isinstance(node, Union):
            keys = [serialize(child) for child in node.children]
            if keys != sorted(keys) or len(set(keys)) != len(keys):
                return False
        if isinstance(node, Repetition) and node.max == 0:
            return False
    return True


@settings(max_examples=1000, deadline=None)
@given(small_regexes)
def test_idempotence(ast):
    for mode in CanonMode:
        once = canonicalize(ast, mode)
        assert canonicalize(once, mode) == once, f"{serialize(ast)!r} in {mode} mode"


@settings(deadline=None)
@given(small_regexes)
def test_canonical_shape(ast):
    assert _is_canonical_shape(canonicalize(ast))


@settings(max_examples=300, deadline=None)
@given(small_regexes)
def test_preserving_mode_keeps_language(ast):
    before = enumerate_language(ast, 6, 100000)
    after = enumerate_language(canonicalize(ast), 6, 100000)
    assert set(before) == set(after), f"{serialize(ast)!r} changed language"


def test_full_mode_caps_bounds():
    canonical = canonicalize(parse("(ab){3,40}c{0,99}d{5,}"), CanonMode.FULL)
    bounds = [node.max for node in walk(canonical) if isinstance(node, Repetition) and not node.is_unbounded()]
    assert bounds and all(bound <= 10 for bound in bounds)


def test_validate_lookaround():
    assert validate("a(?=b)").reason == Reason.LOOKAROUND


def test_validate_union_too_wide():
    verdict = validate("a|b|c|d|e|f|g|h|i|j|k")
    assert not verdict.accepted
    assert verdict.reason == Reason.UNION_TOO_WIDE


def test_validate_accepts():
    verdict = validate("abc")
    assert verdict.accepted
    assert verdict.canonical == Literal("abc")


@pytest.mark.parametrize("pattern, reason", [
    ("(a", Reason.UNPARSABLE),
    ("(a)\\1", Reason.BACKREFERENCE),
    ("a\x01", Reason.NON_PRINTABLE),
    ("a" * 111, Reason.TOO_LONG),
    ("()", Reason.EMPTY_AFTER_OPTIMIZE),
    ("a{0}", Reason.EMPTY_AFTER_OPTIMIZE),
])
def test_validate_rejections(pattern, reason):
    verdict = validate(pattern)
    assert verdict.reason == reason, f"{pattern!r} should be rejected as {reason}"
    assert not verdict.accepted


def test_validate_backreference_before_compile():
    assert validate("a\\1").reason == Reason.BACKREFERENCE, "An unbound group reference is still a backreference"
    assert validate("a(?<=b)").reason == Reason.LOOKAROUND


def test_validate_measures_canonical_length():
    redundant = "a{1,1}" * 20
    assert len(redundant) > 110
    verdict = validate(redundant)
    assert verdict.accepted, "Redundant quantifiers vanish before the length check"
    assert verdict.canonical == Literal("a" * 20)

    unrolled = "(abcdefghijkl){10}"
    assert len(unrolled) <= 110
    assert validate(unrolled).reason == Reason.TOO_LONG, "The unrolled canonical form is 120 characters"


def test_anonymize_long_literals():
    ast = Concat((Literal("http"), CharClass(DIGITS)))
    anonymized, mapping = anonymize_literals(ast, seed=7)
    assert len(mapping) == 1
    token = mapping.tokens["http"]
    assert ord(token) in TOKEN_CODES
    assert ord(token) not in tuple(ReservedToken)
    assert anonymized == Concat((Literal(token), CharClass(DIGITS)))


def test_anonymize_short_literal_untouched():
    anonymized, mapping = anonymize_literals(Literal("a"), seed=1)
    assert anonymized == Literal("a")
    assert len(mapping) == 0


def test_anonymize_deterministic():
    ast = parse("foo|bar(baz)*")
    assert anonymize_literals(ast, seed=3) == anonymize_literals(ast, seed=3)


def test_anonymize_restores():
    ast = canonicalize(parse("foo\\d+bar|qux"))
    anonymized, mapping = anonymize_literals(ast, seed=11)
    assert serialize(restore_literals(anonymized, mapping)) == serialize(ast)


def test_anonymize_token_exhaustion():
    literals = [Literal(chr(ord("a") + index // 10) + str(index % 10)) for index in range(26)]
    with pytest.raises(TokenExhaustion):
        anonymize_literals(Union(tuple(literals)))


def test_anonymized_pattern_parses_back():
    anonymized, _ = anonymize_literals(canonicalize(parse("abc\\d")), seed=5)
    assert parse(serialize(anonymized), allow_tokens=True) == anonymized


def test_extract_subregexes():
    pieces = extract_subregexes(parse("(a|bc)*"))
    assert {serialize(piece) for piece in pieces} == {"(a|bc)*", "a|bc", "a", "bc"}
    assert serialize(pieces[0]) == "(a|bc)*", "The original should come first"


def test_extract_literal():
    assert extract_subregexes(Literal("a")) == (Literal("a"),)


def test_extract_dedup():
    pieces = extract_subregexes(parse("ab|ab"))
    assert len(pieces) == len(set(pieces))
    assert pieces == (Literal("ab"),)


def test_structure_signature_ignores_literals():
    assert structure_signature(canonicalize(parse("ab\\d+"))) == structure_signature(canonicalize(parse("xyz\\d+")))
    assert structure_signature(parse("a\\d")) != structure_signature(parse("a\\w"))
