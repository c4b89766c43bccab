from __future__ import annotations

import logging
from itertools import groupby

from ..config import SynthesisConfig
from ..exampleset import ExampleSet
from ..regex.nodes import RegexAst
from .enumerative import enumerative_base
from .strategies import Partition, RouterAction, Segmentation, StrategySuite, unsplit

logger = logging.getLogger(__name__)


def longest_common_substring(strings: tuple[str, ...]) -> str:
    """
    Finds the longest non-empty substring shared by every string. Ties go
    to the leftmost occurrence in the first string.

    :param strings: at least one string
    :return: the substring, empty if there is none
    """
    first = strings[0]
    for length in range(len(first), 0, -1):
        for start in range(len(first) - length + 1):
            candidate = first[start:start + length]
            if all(candidate in text for text in strings[1:]):
                return candidate
    return ""


def heuristic_segment(positives: tuple[str, ...]) -> Segmentation:
    """
    Splits every string around the longest substring they all share, at its
    first occurrence, into (prefix, separator, suffix). The split is only
    made when some string has a non-empty prefix and some string a non-empty
    suffix; otherwise the strings stay whole (k = 1).

    :param positives: the strings
    :return: the 3-way splits, or the unsplit strings
    """
    separator = longest_common_substring(positives)
    if not separator:
        return unsplit(positives)
    splits = []
    for text in positives:
        at = text.index(separator)
        splits.append((text[:at], separator, text[at + len(separator):]))
    if not any(split[0] for split in splits) or not any(split[2] for split in splits):
        return unsplit(positives)
    return Segmentation(tuple(splits))


def _category(char: str) -> str:
    if char.isdigit():
        return "digit"
    if char.islower():
        return "lower"
    if char.isupper():
        return "upper"
    if char.isspace():
        return "space"
    return "other"


def structural_signature(text: str) -> tuple[str, ...]:
    """
    Collapses a string into its runs of character categories, e.g.
    "IIABC" -> (upper,) and "ab-12" -> (lower, other, digit).
    """
    return tuple(category for category, _ in groupby(_category(char) for char in text))


def heuristic_partition(positives: tuple[str, ...]) -> Partition:
    """
    Groups strings with the same structural signature, groups ordered by
    first appearance.

    :param positives: the strings
    :return: the grouping
    """
    groups: dict[tuple[str, ...], list[str]] = {}
    for text in positives:
        groups.setdefault(structural_signature(text), []).append(text)
    return Partition(tuple(tuple(group) for group in groups.values()))


def heuristic_router(positives: tuple[str, ...], prev: RouterAction | None) -> RouterAction:
    """
    Segments when a shared separator exists, else partitions when the
    strings have more than one structural signature, else synthesizes.
    The decomposition that produced the current node is never chosen again.

    :param positives: the strings
    :param prev: the previous decomposition, None at the root
    :return: the action
    """
    if prev != RouterAction.SEGMENT and heuristic_segment(positives).k > 1:
        return RouterAction.SEGMENT
    if prev != RouterAction.PARTITION and heuristic_partition(positives).m > 1:
        return RouterAction.PARTITION
    return RouterAction.SYNTHESIZE


def _enumerative(config: SynthesisConfig):
    def base(examples: ExampleSet, hint: RegexAst | None) -> RegexAst | None:
        return enumerative_base(examples.positives, examples.negatives, config.base_budget, config.base_max_cost, config.class_cost)
    return base


def heuristic_suite(config: SynthesisConfig | None = None) -> StrategySuite:
    """
    Full recursion driven by the separator and signature heuristics.
    """
    config = config or SynthesisConfig()
    return StrategySuite(
        "heuristic",
        lambda examples, prev, hint: heuristic_router(examples.positives, prev),
        lambda positives, hint: heuristic_partition(positives),
        lambda positives, hint: heuristic_segment(positives),
        _enumerative(config),
    )


def base_only_suite(config: SynthesisConfig | None = None) -> StrategySuite:
    """
    No decomposition at all: every example set goes straight to the base synthesizer.
    """
    config = config or SynthesisConfig()
    return StrategySuite(
        "base-only",
        lambda examples, prev, hint: RouterAction.SYNTHESIZE,
        lambda positives, hint: Partition((positives,)),
        lambda positives, hint: unsplit(positives),
        _enumerative(config),
    )


def single_level_suite(config: SynthesisConfig | None = None) -> StrategySuite:
    """
    One heuristic segmentation at the root, every column then solved directly.
    """
    config = config or SynthesisConfig()

    def route(examples: ExampleSet, prev: RouterAction | None, hint: RegexAst | None) -> RouterAction:
        if prev is None and heuristic_segment(examples.positives).k > 1:
            return RouterAction.SEGMENT
        return RouterAction.SYNTHESIZE

    return StrategySuite(
        "single-level",
        route,
        lambda positives, hint: Partition((positives,)),
        lambda positives, hint: heuristic_segment(positives),
        _enumerative(config),
    )
