import dataclasses
import io
import logging
import math
from pathlib import Path

import pytest

from resyn.canon import validate
from resyn.config import Settings
from resyn.eventmanager import EventManager, InstanceEvaluatedEvent
from resyn.evaluation import *
from resyn.examplegen import Instance, build_instance, read_patterns
from resyn.exampleset import ExampleSet
from resyn.regex import Literal, parse, serialize
from resyn.view.progress import ProgressView

DATA = Path(__file__).resolve().parent.parent / "data"


def _instance(gt: str, train: ExampleSet, holdout: ExampleSet = ExampleSet()) -> Instance:
    return Instance("t", parse(gt), train, holdout)


def test_mcc_perfect():
    assert mcc(ConfusionCounts(tp=5, tn=5)) == 1.0


def test_mcc_inverted():
    assert mcc(ConfusionCounts(fp=5, fn=5)) == -1.0


def test_mcc_zero_denominator():
    assert mcc(ConfusionCounts(tp=3, fp=2)) == 0.0, "A missing class should score 0"
    assert mcc(ConfusionCounts()) == 0.0


def test_mcc_derived_value():
    assert mcc(ConfusionCounts(tp=3, tn=2, fp=2, fn=1)) == pytest.approx(4 / math.sqrt(240), abs=1e-9)
    assert mcc(ConfusionCounts(tp=3, tn=2, fp=2, fn=1)) == pytest.approx(0.2582, abs=1e-4)


def test_mcc_symmetric():
    counts = ConfusionCounts(tp=7, tn=3, fp=1, fn=4)
    swapped = ConfusionCounts(tp=counts.tn, tn=counts.tp, fp=counts.fn, fn=counts.fp)
    assert mcc(counts) == pytest.approx(mcc(swapped))


def test_confusion_counts():
    counts = ConfusionCounts.of(parse("\\d+"), ExampleSet(("1", "a"), ("b", "2")))
    assert counts == ConfusionCounts(tp=1, tn=1, fp=1, fn=1)
    assert counts.total == 4


def test_conciseness():
    assert conciseness(parse("[a-z]+"), parse("[a-z]+")) == 1.0
    assert conciseness(parse("abc|abd"), parse("ab[cd]")) == pytest.approx(7 / 6)
    assert conciseness(Literal("a"), parse("")) == 1.0


def test_failure_substitute():
    assert serialize(failure_substitute(("b", "a.c"))) == "b|a\\.c"


def test_evaluate_exact_prediction():
    instance = _instance("[a-z]+", ExampleSet(("ab", "c"), ("a1",)), ExampleSet(("xyz",), ("x2",)))
    row = evaluate_instance(parse("[a-z]+"), instance)
    assert row.success
    assert row.semantic_hit
    assert row.mcc == 1.0
    assert row.conciseness == 1.0
    assert row.depth == 2


def test_evaluate_failure_uses_substitute():
    instance = _instance("\\d+", ExampleSet(("12", "345"), ("1a",)), ExampleSet(("7",), ("a",)))
    row = evaluate_instance(None, instance, error="BudgetExceeded: out of time")
    assert not row.success
    assert row.pattern is None
    assert row.conciseness > 1, "The failure substitute should be longer than the ground truth"
    assert row.semantic_hit is False
    assert row.error.startswith("BudgetExceeded")


def test_evaluate_holdout_miss():
    instance = _instance("[a-z]+", ExampleSet(("ab", "c"), ("a1",)), ExampleSet(("xyz",), ("",)))
    row = evaluate_instance(parse("[a-z]*"), instance)
    assert row.success, "The prediction fits the training examples"
    assert row.semantic_hit is False, "Accepting the empty string should miss the held-out negative"
    assert row.mcc == 0.0


def test_evaluate_without_holdout():
    row = evaluate_instance(parse("[bc]at|dog"), _instance("[bc]at|dog", ExampleSet(("bat", "dog"))))
    assert row.semantic_hit is None
    assert row.mcc is None


def test_inconsistent_prediction_is_failure():
    instance = _instance("\\d+", ExampleSet(("1", "22"), ("a",)))
    assert not evaluate_instance(parse("\\w+"), instance).success


def test_empty_corpus():
    report = evaluate_corpus([])
    assert report.success_rate is None
    assert report.semantic_accuracy is None
    assert report.summary()["instances"] == 0


def test_aggregate_buckets():
    rows = [
        InstanceRow("a", "x", "x", True, True, 1.0, 1.0, 2),
        InstanceRow("b", "x", None, False, None, None, 2.0, 7),
    ]
    report = EvalReport.aggregate("heuristic", rows)
    assert report.success_rate == 50.0
    assert report.conciseness_mean == 1.5
    assert report.semantic_accuracy == 100.0
    assert report.no_holdout == 1
    assert report.depth_buckets["6+"] == {"instances": 1, "success_rate": 0.0}
    assert report.depth_buckets["3"] == {"instances": 0, "success_rate": None}


def test_make_suite():
    assert make_suite("heuristic", None, Settings()).name == "heuristic"
    with pytest.raises(ValueError):
        make_suite("oracle", None, Settings())
    with pytest.raises(ValueError):
        make_suite("neural", None, Settings())


def _oracle_corpus() -> list[Instance]:
    instances = []
    for index, pattern in enumerate(read_patterns(str(DATA / "oracle_corpus.txt"))):
        verdict = validate(pattern)
        assert verdict.accepted, f"{pattern!r} was rejected as {verdict.reason}"
        instances.append(build_instance(verdict.canonical, seed=index, instance_id=str(index)))
    return instances


def test_oracle_pipeline_on_bundled_corpus():
    instances = _oracle_corpus()
    assert len(instances) == 50
    report = evaluate_corpus(instances, "oracle")
    failed = [row.gt for row in report.rows if not row.success]
    assert report.success_rate == 100.0, f"Oracle synthesis failed on {failed}"
    assert report.semantic_accuracy >= 95.0
    assert report.conciseness_mean <= 1.5


def test_corpus_stats_optional_union():
    stats = corpus_stats([parse("a(b|c)?")])
    assert stats.mean_depth == 4
    assert stats.mean_unions == 1
    assert stats.top_level == {"Concat": 1}


def test_corpus_stats_structures():
    stats = corpus_stats([parse("ab\\d+"), parse("xyz\\d+"), parse("\\w")], canonicalize_first=True)
    assert stats.instances == 3
    assert stats.unique_structures == 2
    assert sum(stats.depths.values()) == 3


def test_corpus_stats_empty():
    assert corpus_stats([]).as_dict()["mean_depth"] is None


def test_depth_corpus_buckets():
    asts = [validate(pattern).canonical for pattern in read_patterns(str(DATA / "depth_corpus.txt"))]
    stats = corpus_stats(asts)
    assert set(stats.depths) == {"1", "2", "3", "4", "5", "6+"}


def test_progress_view_reports_instances():
    manager = EventManager()
    stream = io.StringIO()
    progress = ProgressView(manager, stream)
    manager.post(InstanceEvaluatedEvent("a", True, 1, 2))
    manager.post(InstanceEvaluatedEvent("b", False, 2, 2))
    assert stream.getvalue().splitlines() == ["[1/2] a ok", "[2/2] b FAIL"]
    assert progress.failures == 1


def test_evaluate_corpus_posts_events():
    manager = EventManager()
    stream = io.StringIO()
    progress = ProgressView(manager, stream)
    instance = build_instance(validate("\\d+").canonical, seed=1, instance_id="digits")
    report = evaluate_corpus([instance], "oracle", event_manager=manager)
    assert report.rows[0].success
    assert "[1/1] digits ok" in stream.getvalue()
    assert progress.failures == 0


def test_unexpected_exception_is_recorded(monkeypatch, caplog):
    import resyn.evaluation.harness as harness

    def crash(examples, hint):
        raise RuntimeError("base exploded")

    original = harness.make_suite

    def broken_for_digits(name, gt, settings, leaf):
        suite = original(name, gt, settings, leaf)
        return dataclasses.replace(suite, base=crash) if serialize(gt) == "\\d+" else suite

    monkeypatch.setattr(harness, "make_suite", broken_for_digits)
    broken = build_instance(validate("\\d+").canonical, seed=1, instance_id="digits")
    healthy = build_instance(validate("[a-z]+").canonical, seed=2, instance_id="letters")
    with caplog.at_level(logging.ERROR, logger="resyn.evaluation.harness"):
        report = evaluate_corpus([broken, healthy], "oracle")
    assert [row.id for row in report.rows] == ["digits", "letters"], "The run should continue past the crash"
    assert not report.rows[0].success
    assert report.rows[0].error == "RuntimeError: base exploded"
    assert report.rows[1].success
    assert any(record.exc_info for record in caplog.records), "The crash should be logged with its traceback"
