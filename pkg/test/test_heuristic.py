from pathlib import Path

from resyn.canon import CanonMode, canonicalize, validate
from resyn.evaluation import DEPTH_BUCKETS, compare_suites
from resyn.examplegen import build_instance, read_patterns
from resyn.regex import ast_stats, parse
from resyn.synth import *

DATA = Path(__file__).resolve().parent.parent / "data"


def test_longest_common_substring():
    assert longest_common_substring(("ab-cd", "xy-zw")) == "-"
    assert longest_common_substring(("xhttpy", "httpz")) == "http"
    assert longest_common_substring(("abc", "xyz")) == ""


def test_segment_around_separator():
    segmentation = heuristic_segment(("ab-cd", "xy-zw"))
    assert segmentation.splits == (("ab", "-", "cd"), ("xy", "-", "zw"))
    assert segmentation.preserves(("ab-cd", "xy-zw"))


def test_segment_needs_prefix_and_suffix():
    assert heuristic_segment(("aa", "ab")).k == 1, "A shared prefix alone should not split the strings"
    assert heuristic_segment(("xa", "ya")).k == 1, "A shared suffix alone should not split the strings"


def test_structural_signature():
    assert structural_signature("IIABC") == ("upper",)
    assert structural_signature("ab-12") == ("lower", "other", "digit")
    assert structural_signature("") == ()


def test_partition_by_signature():
    partition = heuristic_partition(("IIABC", "VVXYZ", "12"))
    assert partition.groups == (("IIABC", "VVXYZ"), ("12",))
    assert partition.is_partition_of(("IIABC", "VVXYZ", "12"))


def test_partition_same_signature():
    assert heuristic_partition(("ab", "cd", "efg")).m == 1


def test_router():
    assert heuristic_router(("ab-cd", "xy-zw"), None) == RouterAction.SEGMENT
    assert heuristic_router(("IIABC", "12"), RouterAction.SEGMENT) == RouterAction.PARTITION
    assert heuristic_router(("aa", "ab"), RouterAction.PARTITION) == RouterAction.SYNTHESIZE


def test_heuristic_solves_nested_union():
    result = synthesize(["12-AB", "ab-CD", "7-X", "xyz-QR"], ["12-ab", "ab_CD"], heuristic_suite())
    assert result.pattern() == "([a-z]+|\\d+)-[A-Z]+"


def test_single_level_stops_after_root():
    result = synthesize(["12-AB", "ab-CD"], [], single_level_suite())
    assert isinstance(result.tree, ConcatNode)
    assert all(isinstance(child, Leaf) for child in result.tree.children)


def test_base_only_never_decomposes():
    result = synthesize(["12-AB", "ab-CD"], [], base_only_suite())
    assert isinstance(result.tree, Leaf)


# Instances whose decomposition the heuristics get right at every level.
RECURSION_CASES = [
    ("(\\d+|[a-z]+)-[A-Z]+", ["12-AB", "ab-CD", "7-X", "xyz-QR"], ["12-ab", "ab_CD"]),
    ("[a-z]+=([a-z]+|\\d+)", ["key=val", "x=12", "ab=7", "id=cd"], ["key=VAL"]),
    ("(x\\d+|[a-z]+)-[A-Z]+", ["x12-AB", "ab-CD", "x7-Q", "mn-XY"], ["x12-ab"]),
    ("[a-z]+:(v\\d+|[A-Z]+)", ["app:v12", "db:QA", "io:v3", "os:XY"], ["app;v12"]),
]


def test_heuristic_solves_recursive_cases():
    for pattern, positives, negatives in RECURSION_CASES:
        depth = ast_stats(canonicalize(parse(pattern), CanonMode.FULL)).depth
        assert depth >= 4, f"{pattern!r} should be a deep case"
        result = synthesize(positives, negatives, heuristic_suite())
        assert result.success, f"The heuristic suite should solve {pattern!r}"


def _depth_corpus() -> list:
    instances = []
    for index, pattern in enumerate(read_patterns(str(DATA / "depth_corpus.txt"))):
        verdict = validate(pattern)
        assert verdict.accepted, f"{pattern!r} was rejected as {verdict.reason}"
        instances.append(build_instance(verdict.canonical, seed=index, instance_id=str(index)))
    return instances


def test_recursion_does_not_lose_to_flat_methods():
    heuristic, base_only, single_level = compare_suites(_depth_corpus(), ("heuristic", "base-only", "single-level"))
    deep = [label for label in DEPTH_BUCKETS if label in ("4", "5", "6+")]
    for label in deep:
        assert heuristic.depth_buckets[label]["instances"] > 0, f"Depth {label} should have instances"
        recursive = heuristic.depth_buckets[label]["success_rate"]
        assert recursive >= base_only.depth_buckets[label]["success_rate"], \
            f"Depth {label}: heuristic {recursive} below base-only {base_only.depth_buckets[label]}"
        assert recursive >= single_level.depth_buckets[label]["success_rate"], \
            f"Depth {label}: heuristic {recursive} below single-level {single_level.depth_buckets[label]}"
