from __future__ import annotations

import argparse
import logging
import sys

from .canon import CanonMode, canonicalize, extract_subregexes, validate
from .config import Settings
from .costs import verify_cost_equalities
from .errors import CorpusError, InsufficientLanguage, RegexSyntaxError, SamplingTimeout
from .eventmanager import EventManager
from .examplegen import build_instance, dedup_by_structure, read_corpus, read_patterns, write_corpus
from .evaluation import DEPTH_BUCKETS, compare_suites, corpus_stats, make_suite
from .regex import parse, serialize
from .synth import LeafMode, synthesize
from .view import OutputFormat, ProgressView, render, render_json

logger = logging.getLogger(__name__)

ROW_COLUMNS = ("id", "success", "semantic_hit", "mcc", "conciseness", "depth", "pattern", "gt")
SUMMARY_COLUMNS = ("suite", "instances", "success_rate", "conciseness_mean", "semantic_accuracy", "mcc_mean", "no_holdout")


def read_lines(path: str) -> list[str]:
    """
    Reads newline-separated strings from a file, or stdin for "-". Interior
    empty lines are kept since the empty string is a valid example.

    :raises CorpusError: if the file cannot be read
    """
    if path == "-":
        return sys.stdin.read().splitlines()
    try:
        with open(path, encoding="utf-8", newline="") as handle:
            return handle.read().splitlines()
    except OSError as e:
        raise CorpusError(path, str(e)) from e


def _leaf_mode(label: str) -> LeafMode:
    return next(mode for mode in LeafMode if str(mode) == label)


class CommandController:
    """
    Turns parsed command-line arguments into toolkit calls and renders
    their results.

    :param settings: every configurable value, already merged with the flags
    :param output_format: how results are printed
    :param seed: the base seed for anything random
    :param jobs: worker processes for corpus evaluation
    :param event_manager: receives progress events
    """

    def __init__(self, settings: Settings, output_format: OutputFormat, seed: int = 0, jobs: int = 1,
                 event_manager: EventManager | None = None):
        self.settings = settings
        self.output_format = output_format
        self.seed = seed
        self.jobs = jobs
        self.event_manager = event_manager or EventManager()

    def dispatch(self, args: argparse.Namespace) -> str:
        """
        Runs the subcommand named in the arguments.

        :param args: the parsed arguments
        :return: the text to print
        """
        handler = getattr(self, f"command_{args.command}")
        logger.info(f"Running {args.command}")
        return handler(args)

    def command_canonicalize(self, args: argparse.Namespace) -> str:
        mode = CanonMode.FULL if args.mode == "full" else CanonMode.PRESERVING
        rows = []
        for pattern in read_lines(args.input):
            verdict = validate(pattern, self.settings.canon)
            if not verdict.accepted:
                rows.append({"pattern": pattern, "result": f"rejected: {verdict.reason}", "accepted": False})
                continue
            try:
                ast = parse(pattern, strip_anchors=mode == CanonMode.FULL)
            except RegexSyntaxError as e:
                rows.append({"pattern": pattern, "result": f"rejected: {e}", "accepted": False})
                continue
            canonical = canonicalize(ast, mode, self.settings.canon)
            rows.append({"pattern": pattern, "result": serialize(canonical), "accepted": True})
        if self.output_format == OutputFormat.TABLE:
            return "\n".join(row["result"] for row in rows)
        return render(rows, ("pattern", "result"), self.output_format)

    def command_validate(self, args: argparse.Namespace) -> str:
        rows = []
        for pattern in read_lines(args.input):
            verdict = validate(pattern, self.settings.canon)
            rows.append({
                "pattern": pattern,
                "accepted": verdict.accepted,
                "reason": str(verdict.reason),
                "canonical": serialize(verdict.canonical) if verdict.canonical is not None else None,
            })
        if self.output_format == OutputFormat.TABLE:
            return "\n".join(row["reason"] for row in rows)
        return render(rows, ("pattern", "accepted", "reason", "canonical"), self.output_format)

    def command_gen(self, args: argparse.Namespace) -> str:
        ground_truths = []
        for pattern in read_patterns(args.patterns):
            verdict = validate(pattern, self.settings.canon)
            if not verdict.accepted:
                logger.warning(f"Skipping {pattern!r}: {verdict.reason}")
                continue
            targets = extract_subregexes(verdict.canonical, CanonMode.FULL) if args.extract else (verdict.canonical,)
            ground_truths.extend(targets)
        ground_truths = list(dict.fromkeys(ground_truths))
        instances = []
        for index, gt in enumerate(ground_truths):
            try:
                instances.append(build_instance(gt, self.settings.generation, self.seed + index, f"{args.prefix}{index:04d}"))
            except (InsufficientLanguage, SamplingTimeout) as e:
                logger.warning(f"Skipping {serialize(gt)!r}: {e}")
        if args.dedup:
            instances = dedup_by_structure(instances)
        count = write_corpus(instances, args.output)
        rows = [{"output": args.output, "patterns": len(ground_truths), "instances": count}]
        return render(rows, ("output", "patterns", "instances"), self.output_format, rows[0])

    def command_synth(self, args: argparse.Namespace) -> str:
        positives = list(args.pos or []) + (read_lines(args.positives) if args.positives else [])
        negatives = list(args.neg or []) + (read_lines(args.negatives) if args.negatives else [])
        if not positives:
            raise ValueError("synth needs at least one positive (--pos or --positives)")
        gt = None
        if args.router == "oracle":
            if args.gt is None:
                raise ValueError("--router oracle requires --gt")
            gt = canonicalize(parse(args.gt, allow_tokens=True))
        suite = make_suite(args.router, gt, self.settings, _leaf_mode(args.leaf))
        result = synthesize(positives, negatives, suite, self.settings.synthesis, self.event_manager)
        document = {
            "regex": result.pattern(),
            "success": result.success,
            "failure": str(result.failure) if result.failure is not None else None,
            "elapsed": result.elapsed,
            "tree": result.tree.to_dict(),
        }
        if self.output_format == OutputFormat.JSON:
            return render_json(document)
        row = {key: document[key] for key in ("regex", "success", "failure", "elapsed")}
        return render([row], ("regex", "success", "failure", "elapsed"), self.output_format)

    def command_align(self, args: argparse.Namespace) -> str:
        strings = read_lines(args.input)
        report = verify_cost_equalities(strings, self.settings.oracle)
        return render_json(report.as_dict())

    def command_eval(self, args: argparse.Namespace) -> str:
        instances = read_corpus(args.corpus)
        suites = args.compare.split(",") if args.compare else [args.suite]
        progress = ProgressView(self.event_manager) if args.progress else None
        reports = compare_suites(instances, suites, self.settings, self.jobs, _leaf_mode(args.leaf), self.event_manager)
        if progress is not None:
            self.event_manager.unregister_listener(progress)
        buckets = [
            {"suite": report.suite, "bucket": label, **report.depth_buckets[label]}
            for report in reports
            for label in DEPTH_BUCKETS
        ]
        if self.output_format == OutputFormat.JSON:
            return render_json([report.as_dict() for report in reports])
        if self.output_format == OutputFormat.CSV:
            return render(buckets, ("suite", "bucket", "instances", "success_rate"), self.output_format)
        sections = [render([report.summary() for report in reports], SUMMARY_COLUMNS, self.output_format)]
        sections.append(render(buckets, ("suite", "bucket", "instances", "success_rate"), self.output_format))
        if len(reports) == 1:
            sections.append(render([vars(row) for row in reports[0].rows], ROW_COLUMNS, self.output_format))
        return "\n\n".join(sections)

    def command_stats(self, args: argparse.Namespace) -> str:
        if args.corpus.endswith(".jsonl"):
            stats = corpus_stats(instance.gt for instance in read_corpus(args.corpus))
        else:
            stats = corpus_stats(
                (parse(pattern, strip_anchors=True) for pattern in read_patterns(args.corpus)),
                canonicalize_first=True,
            )
        if self.output_format == OutputFormat.JSON:
            return render_json(stats.as_dict())
        summary = stats.as_dict()
        rows = [{"statistic": key, "value": summary[key]} for key in
                ("instances", "unique_structures", "mean_depth", "mean_nodes", "mean_unions")]
        rows.extend({"statistic": f"top-level {name}", "value": count} for name, count in stats.top_level.items())
        rows.extend({"statistic": f"depth {name}", "value": count} for name, count in stats.depths.items())
        return render(rows, ("statistic", "value"), self.output_format)

    def command_dedup(self, args: argparse.Namespace) -> str:
        instances = read_corpus(args.corpus)
        kept = dedup_by_structure(instances)
        write_corpus(kept, args.output)
        rows = [{"input": len(instances), "kept": len(kept), "output": args.output}]
        return render(rows, ("input", "kept", "output"), self.output_format, rows[0])
