from __future__ import annotations

import json
import logging
from typing import Iterable

from ..canon.anonymize import structure_signature
from ..errors import CorpusError, RegexSyntaxError
from ..exampleset import ExampleSet
from ..regex.parser import parse
from .instance import Instance

logger = logging.getLogger(__name__)

_FIELDS = ("id", "gt", "positives", "negatives", "holdout_positives", "holdout_negatives")


def instance_to_record(instance: Instance) -> dict:
    return {
        "id": instance.id,
        "gt": instance.pattern(),
        "positives": list(instance.train.positives),
        "negatives": list(instance.train.negatives),
        "holdout_positives": list(instance.holdout.positives),
        "holdout_negatives": list(instance.holdout.negatives),
    }


def record_to_instance(record: dict) -> Instance:
    """
    Rebuilds an instance from one decoded corpus line.

    :param record: the decoded JSON object
    :return: the instance
    :raises KeyError: if a field is missing
    :raises RegexSyntaxError: if the ground truth does not parse
    :raises ValueError: if a string is both positive and negative
    """
    missing = [name for name in _FIELDS if name not in record]
    if missing:
        raise KeyError(f"missing fields {missing}")
    return Instance(
        str(record["id"]),
        parse(record["gt"], allow_tokens=True),
        ExampleSet(tuple(record["positives"]), tuple(record["negatives"])),
        ExampleSet(tuple(record["holdout_positives"]), tuple(record["holdout_negatives"])),
    )


def write_corpus(instances: Iterable[Instance], path: str) -> int:
    """
    Writes instances as JSON lines, one per line. Control characters are
    escaped by the JSON encoder.

    :param instances: the instances
    :param path: the output file
    :return: the number of instances written
    :raises CorpusError: if the file cannot be written
    """
    count = 0
    try:
        with open(path, "w", encoding="utf-8") as handle:
            for instance in instances:
                handle.write(json.dumps(instance_to_record(instance)) + "\n")
                count += 1
    except OSError as e:
        raise CorpusError(path, str(e)) from e
    logger.info(f"Wrote {count} instances to {path}")
    return count


def read_corpus(path: str) -> list[Instance]:
    """
    Reads a JSON-lines corpus. Blank lines are skipped.

    :param path: the corpus file
    :return: the instances in file order
    :raises CorpusError: on unreadable files or malformed records, with the line number
    """
    instances = []
    try:
        with open(path, encoding="utf-8") as handle:
            for number, line in enumerate(handle, start=1):
                if not line.strip():
                    continue
                try:
                    instances.append(record_to_instance(json.loads(line)))
                except (json.JSONDecodeError, KeyError, TypeError, ValueError, RegexSyntaxError) as e:
                    raise CorpusError(path, f"bad record: {e}", number) from e
    except OSError as e:
        raise CorpusError(path, str(e)) from e
    logger.info(f"Read {len(instances)} instances from {path}")
    return instances


def read_patterns(path: str) -> list[str]:
    """
    Reads a pattern list: one pattern per line, blank lines and lines
    starting with # skipped. Surrounding whitespace is kept except the
    line break, since spaces are meaningful in patterns.

    :param path: the pattern file
    :return: the patterns
    :raises CorpusError: if the file cannot be read
    """
    try:
        with open(path, encoding="utf-8") as handle:
            lines = [line.rstrip("\r\n") for line in handle]
    except OSError as e:
        raise CorpusError(path, str(e)) from e
    return [line for line in lines if line.strip() and not line.startswith("#")]


def dedup_by_structure(instances: Iterable[Instance]) -> list[Instance]:
    """
    Keeps the first instance of every literal-abstracted structure, so two
    ground truths differing only in their literals count once.

    :param instances: the instances
    :return: the survivors in input order
    """
    seen: set[str] = set()
    kept = []
    for instance in instances:
        signature = structure_signature(instance.gt)
        if signature in seen:
            logger.debug(f"Dropping {instance.id}: structure {signature!r} already present")
            continue
        seen.add(signature)
        kept.append(instance)
    return kept
