from __future__ import annotations

import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Iterable

import numpy as np

from ..config import Settings
from ..errors import ResynError
from ..eventmanager import EventManager, InstanceEvaluatedEvent
from ..examplegen.instance import Instance
from ..regex.nodes import RegexAst
from ..regex.serializer import serialize
from ..regex.stats import ast_depth
from ..synth.engine import consistent, synthesize
from ..synth.heuristic import base_only_suite, heuristic_suite, single_level_suite
from ..synth.oracle import LeafMode, oracle_suite
from ..synth.strategies import StrategySuite
from .metrics import ConfusionCounts, conciseness, failure_substitute, mcc

logger = logging.getLogger(__name__)

SUITES = ("oracle", "heuristic", "base-only", "single-level")
DEPTH_BUCKETS = ("1", "2", "3", "4", "5", "6+")


def make_suite(name: str, gt: RegexAst | None, settings: Settings, leaf: LeafMode = LeafMode.ENUMERATIVE) -> StrategySuite:
    """
    Builds a strategy suite by name.

    :param name: one of SUITES
    :param gt: the ground truth, required by the oracle suite
    :param settings: the synthesis budgets
    :param leaf: how oracle leaves are solved
    :return: the suite
    """
    if name == "oracle":
        if gt is None:
            raise ValueError("The oracle suite needs a ground truth")
        return oracle_suite(gt, settings.synthesis, leaf)
    if name == "heuristic":
        return heuristic_suite(settings.synthesis)
    if name == "base-only":
        return base_only_suite(settings.synthesis)
    if name == "single-level":
        return single_level_suite(settings.synthesis)
    raise ValueError(f"Unknown suite {name!r}; choose from {', '.join(SUITES)}")


def depth_bucket(depth: int) -> str:
    return str(depth) if depth < 6 else "6+"


@dataclass
class InstanceRow:
    """
    The scores of one instance. Secondary metrics of a failed instance are
    taken on the union of its training positives. semantic_hit is None when
    the instance has no held-out examples.
    """

    id: str
    gt: str
    pattern: str | None
    success: bool
    semantic_hit: bool | None
    mcc: float | None
    conciseness: float
    depth: int
    elapsed: float = 0.0
    error: str | None = None

    @property
    def bucket(self) -> str:
        return depth_bucket(self.depth)


def evaluate_instance(pred: RegexAst | None, instance: Instance, elapsed: float = 0.0, error: str | None = None) -> InstanceRow:
    """
    Scores a prediction against an instance.

    :param pred: the synthesized regex, None for a failure
    :param instance: the instance
    :param elapsed: the synthesis time to record
    :param error: the error that caused a failure, if any
    :return: the row
    """
    success = pred is not None and consistent(pred, instance.train.positives, instance.train.negatives)
    scored = pred if pred is not None else failure_substitute(instance.train.positives)
    semantic_hit = None
    score = None
    if len(instance.holdout):
        counts = ConfusionCounts.of(scored, instance.holdout)
        semantic_hit = counts.fp == 0 and counts.fn == 0
        score = mcc(counts)
    return InstanceRow(
        id=instance.id,
        gt=instance.pattern(),
        pattern=serialize(pred) if pred is not None else None,
        success=success,
        semantic_hit=semantic_hit,
        mcc=score,
        conciseness=conciseness(scored, instance.gt),
        depth=ast_depth(instance.gt),
        elapsed=elapsed,
        error=error,
    )


def run_instance(instance: Instance, suite_name: str, settings: Settings, leaf: LeafMode = LeafMode.ENUMERATIVE) -> InstanceRow:
    """
    Synthesizes one instance and scores it. Errors are recorded as failures;
    an unexpected exception is logged with its traceback and never ends the run.
    """
    start = time.perf_counter()
    try:
        suite = make_suite(suite_name, instance.gt, settings, leaf)
        result = synthesize(instance.train.positives, instance.train.negatives, suite, settings.synthesis)
        return evaluate_instance(result.regex, instance, result.elapsed)
    except (ResynError, ValueError) as e:
        logger.warning(f"Instance {instance.id} failed with {type(e).__name__}: {e}")
        return evaluate_instance(None, instance, time.perf_counter() - start, f"{type(e).__name__}: {e}")
    except Exception as e:
        logger.exception(f"Instance {instance.id} crashed in suite {suite_name}")
        return evaluate_instance(None, instance, time.perf_counter() - start, f"{type(e).__name__}: {e}")


def _run_packed(job: tuple) -> InstanceRow:
    return run_instance(*job)


def _mean(values: list[float]) -> float | None:
    return float(np.mean(values)) if values else None


def _percent(flags: list[bool]) -> float | None:
    return float(np.mean(flags) * 100) if flags else None


@dataclass
class EvalReport:
    """
    The scores of one suite over a corpus. Aggregates are None when no
    instance contributes to them. Instances without held-out examples are
    left out of semantic accuracy and MCC and counted in no_holdout.
    """

    suite: str
    rows: list[InstanceRow] = field(default_factory=list)
    success_rate: float | None = None
    conciseness_mean: float | None = None
    semantic_accuracy: float | None = None
    mcc_mean: float | None = None
    no_holdout: int = 0
    depth_buckets: dict[str, dict] = field(default_factory=dict)

    @staticmethod
    def aggregate(suite: str, rows: list[InstanceRow]) -> EvalReport:
        """
        Reduces per-instance rows to the corpus metrics.

        :param suite: the suite name
        :param rows: the rows in corpus order
        :return: the report
        """
        judged = [row for row in rows if row.semantic_hit is not None]
        buckets = {}
        for label in DEPTH_BUCKETS:
            members = [row for row in rows if row.bucket == label]
            buckets[label] = {"instances": len(members), "success_rate": _percent([row.success for row in members])}
        return EvalReport(
            suite=suite,
            rows=rows,
            success_rate=_percent([row.success for row in rows]),
            conciseness_mean=_mean([row.conciseness for row in rows]),
            semantic_accuracy=_percent([row.semantic_hit for row in judged]),
            mcc_mean=_mean([row.mcc for row in judged]),
            no_holdout=len(rows) - len(judged),
            depth_buckets=buckets,
        )

    def summary(self) -> dict:
        return {
            "suite": self.suite,
            "instances": len(self.rows),
            "success_rate": self.success_rate,
            "conciseness_mean": self.conciseness_mean,
            "semantic_accuracy": self.semantic_accuracy,
            "mcc_mean": self.mcc_mean,
            "no_holdout": self.no_holdout,
        }

    def as_dict(self) -> dict:
        data = self.summary()
        data["depth_buckets"] = self.depth_buckets
        data["rows"] = [asdict(row) for row in self.rows]
        return data


def evaluate_corpus(
        instances: Iterable[Instance],
        suite_name: str = "oracle",
        settings: Settings | None = None,
        jobs: int = 1,
        leaf: LeafMode = LeafMode.ENUMERATIVE,
        event_manager: EventManager | None = None) -> EvalReport:
    """
    Synthesizes and scores every instance of a corpus. With more than one
    job the instances run in a process pool; rows always come back in
    corpus order.

    :param instances: the corpus
    :param suite_name: the strategy suite, one of SUITES
    :param settings: budgets and knobs
    :param jobs: the number of worker processes
    :param leaf: how oracle leaves are solved
    :param event_manager: receives one event per scored instance
    :return: the report
    """
    settings = settings or Settings()
    instances = list(instances)
    jobs_list = [(instance, suite_name, settings, leaf) for instance in instances]
    if jobs > 1 and len(instances) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            outcomes = pool.map(_run_packed, jobs_list)
            rows = _collect(outcomes, len(instances), event_manager)
    else:
        rows = _collect(map(_run_packed, jobs_list), len(instances), event_manager)
    report = EvalReport.aggregate(suite_name, rows)
    logger.info(f"Evaluated {len(rows)} instances with {suite_name}: success {report.success_rate}")
    return report


def _collect(outcomes, total: int, event_manager: EventManager | None) -> list[InstanceRow]:
    rows = []
    for position, row in enumerate(outcomes, start=1):
        rows.append(row)
        if event_manager is not None:
            event_manager.post(InstanceEvaluatedEvent(row.id, row.success, position, total))
    return rows


def compare_suites(
        instances: Iterable[Instance],
        suite_names: Iterable[str],
        settings: Settings | None = None,
        jobs: int = 1,
        leaf: LeafMode = LeafMode.ENUMERATIVE,
        event_manager: EventManager | None = None) -> list[EvalReport]:
    """
    Runs several suites over the same corpus.

    :return: one report per suite, in the order given
    """
    instances = list(instances)
    return [evaluate_corpus(instances, name, settings, jobs, leaf, event_manager) for name in suite_names]
