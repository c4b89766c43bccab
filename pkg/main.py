import argparse
import logging
import os
import sys
from logging.handlers import RotatingFileHandler

from resyn import controller, eventmanager, view
from resyn.config import Settings
from resyn.errors import ConfigError, CorpusError, ResynError
from resyn.evaluation import SUITES

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_CORPUS = 2


class _ArgumentParser(argparse.ArgumentParser):
    """
    An argument parser that reports usage errors with exit code 1.
    """

    def error(self, message: str):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(EXIT_USAGE)


def _init_logger(args: argparse.Namespace) -> None:
    """
    Initializes the logger from a log path.

    :param args: the parsed arguments holding the log path and level
    """
    os.makedirs(args.log_path, exist_ok=True)
    log_file_path = os.path.join(args.log_path, "resyn.log")
    logging.basicConfig(
        handlers=[RotatingFileHandler(
            log_file_path,
            backupCount=10,
            maxBytes=1000000,
            encoding="utf-8"
        )],
        level=args.log_level,
        format='%(asctime)s,%(msecs)d %(levelname)-8s [%(filename)s:%(lineno)d] %(message)s',
        datefmt='%Y-%m-%d:%H:%M:%S',
    )
    logger.info(f"Initialized logger: files dumped to {args.log_path}")


def _load_settings(args: argparse.Namespace) -> Settings:
    """
    Builds the settings: defaults, then the config file, then --set overrides.
    """
    settings = Settings.from_file(args.config) if args.config else Settings()
    for override in args.set or []:
        key, separator, value = override.partition("=")
        if not separator:
            raise ConfigError(f"Expected key=value, got {override!r}")
        settings.set(key.strip(), value.strip())
    return settings


def _run_with_crash_handling(args: argparse.Namespace) -> int:
    """
    Runs the chosen command while waiting for errors.

    :param args: the parsed arguments
    :return: the exit code
    """
    try:
        settings = _load_settings(args)
        commands = controller.CommandController(
            settings,
            view.OutputFormat.from_label(args.format),
            seed=args.seed,
            jobs=args.jobs,
            event_manager=eventmanager.EventManager(),
        )
        output = commands.dispatch(args)
        if output:
            print(output)
        return EXIT_OK
    except CorpusError as e:
        logger.error(f"Corpus error: {e}")
        print(f"Corpus error: {e}", file=sys.stderr)
        return EXIT_CORPUS
    except (ResynError, ValueError) as e:
        logger.error(f"{type(e).__name__}: {e}")
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except Exception as e:
        logger.exception(e)
        print(f"resyn crashed! Check logs: {args.log_path}", file=sys.stderr)
        return EXIT_USAGE


def _process_arguments(argv: list[str] | None = None) -> argparse.Namespace:
    parser = _ArgumentParser(prog="resyn", description="Regex synthesis from examples")
    parser.add_argument(
        "--log_level",
        type=str,
        required=False,
        choices=logging._nameToLevel.keys(),
        default="WARNING"
    )
    parser.add_argument(
        "--log_path",
        type=str,
        required=False,
        default=os.path.join(
            os.path.abspath(os.path.dirname(__file__)),
            "logs"
        )
    )
    parser.add_argument("--seed", type=int, default=0, help="base seed for sampling")
    parser.add_argument("--config", type=str, help="a file of section.key=value lines")
    parser.add_argument("--set", action="append", metavar="KEY=VALUE", help="override one setting")
    parser.add_argument("--jobs", type=int, default=1, help="worker processes for eval")
    parser.add_argument("--format", choices=[str(member) for member in view.OutputFormat], default="table")
    commands = parser.add_subparsers(dest="command", required=True)

    canonicalize = commands.add_parser("canonicalize", help="print canonical forms, one pattern per line")
    canonicalize.add_argument("input", nargs="?", default="-")
    canonicalize.add_argument("--mode", choices=("preserving", "full"), default="full")

    validate = commands.add_parser("validate", help="print validation verdicts, one pattern per line")
    validate.add_argument("input", nargs="?", default="-")

    gen = commands.add_parser("gen", help="generate a corpus from a pattern list")
    gen.add_argument("patterns")
    gen.add_argument("--output", "-o", required=True)
    gen.add_argument("--prefix", default="inst-")
    gen.add_argument("--extract", action="store_true", help="also generate instances for every sub-regex")
    gen.add_argument("--dedup", action="store_true", help="drop instances with repeated structure")

    synth = commands.add_parser("synth", help="synthesize one regex")
    synth.add_argument("--pos", action="append", help="a positive example")
    synth.add_argument("--neg", action="append", help="a negative example")
    synth.add_argument("--positives", help="a file of positives, one per line")
    synth.add_argument("--negatives", help="a file of negatives, one per line")
    synth.add_argument("--router", choices=SUITES, default="heuristic")
    synth.add_argument("--gt", help="the ground truth driving the oracle router")
    synth.add_argument("--leaf", choices=("enumerative", "ground-truth"), default="enumerative")

    align = commands.add_parser("align", help="compute the exact costs of a string set")
    align.add_argument("input", nargs="?", default="-")

    evaluate = commands.add_parser("eval", help="evaluate a suite over a corpus")
    evaluate.add_argument("corpus")
    evaluate.add_argument("--suite", choices=SUITES, default="oracle")
    evaluate.add_argument("--compare", help="comma-separated suites to run side by side")
    evaluate.add_argument("--leaf", choices=("enumerative", "ground-truth"), default="enumerative")
    evaluate.add_argument("--progress", action="store_true", help="print one line per instance on stderr")

    stats = commands.add_parser("stats", help="structural statistics of a corpus or pattern list")
    stats.add_argument("corpus")

    dedup = commands.add_parser("dedup", help="drop instances with repeated literal-abstracted structure")
    dedup.add_argument("corpus")
    dedup.add_argument("--output", "-o", required=True)

    args = parser.parse_args(argv)
    if getattr(args, "compare", None):
        unknown = [name for name in args.compare.split(",") if name not in SUITES]
        if unknown:
            parser.error(f"unknown suites in --compare: {', '.join(unknown)}")
    if args.jobs < 1:
        parser.error("--jobs must be at least 1")
    return args


def run(argv: list[str] | None = None) -> int:
    """
    The main function that launches the toolkit.
    """
    args = _process_arguments(argv)
    _init_logger(args)
    return _run_with_crash_handling(args)


if __name__ == "__main__":
    sys.exit(run())
