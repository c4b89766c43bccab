from __future__ import annotations

import logging
from enum import Enum, auto

from ..config import SynthesisConfig
from ..errors import SegmentationFailure, UnmatchedString
from ..exampleset import ExampleSet
from ..regex.matcher import matches
from ..regex.nodes import Concat, RegexAst, Union
from ..regex.serializer import serialize
from .enumerative import enumerative_base
from .strategies import Partition, RouterAction, Segmentation, StrategySuite, unsplit

logger = logging.getLogger(__name__)


class LeafMode(Enum):
    """
    How the oracle suite solves leaves.

    :member ENUMERATIVE: run the enumerative base synthesizer.
    :member GROUND_TRUTH: return the ground-truth sub-regex when it fits the examples.
    """

    ENUMERATIVE = auto(), "enumerative"
    GROUND_TRUTH = auto(), "ground-truth"

    def __new__(cls, *args, **kwargs):
        obj = object.__new__(cls)
        obj._value_ = args[0]
        return obj

    def __init__(self, _: int, label: str = ""):
        self._label = label

    def __str__(self):
        return self._label


def oracle_router(gt: RegexAst | None) -> RouterAction:
    """
    Routes by the root of the ground truth: unions are partitioned,
    concatenations segmented and anything else synthesized.

    :param gt: the ground-truth regex of the current node
    :return: the action
    """
    if isinstance(gt, Union):
        return RouterAction.PARTITION
    if isinstance(gt, Concat):
        return RouterAction.SEGMENT
    return RouterAction.SYNTHESIZE


def oracle_partition(gt: Union, positives: tuple[str, ...]) -> Partition:
    """
    Groups strings by the first branch of the ground truth that matches them.
    Groups are ordered by first appearance, so the first string always lands
    in the first group.

    :param gt: a union
    :param positives: strings the union accepts
    :return: the groups, each hinted with its branch
    :raises UnmatchedString: if a string matches no branch
    """
    groups: dict[int, list[str]] = {}
    for text in positives:
        branch = next((index for index, child in enumerate(gt.children) if matches(child, text)), None)
        if branch is None:
            raise UnmatchedString(f"{text!r} matches no branch of {serialize(gt)!r}")
        groups.setdefault(branch, []).append(text)
    return Partition(
        tuple(tuple(group) for group in groups.values()),
        tuple(gt.children[branch] for branch in groups),
    )


def split_along(children: tuple[RegexAst, ...], text: str) -> tuple[str, ...] | None:
    """
    Splits a string so that piece i matches children[i]. Boundaries are
    chosen leftmost-shortest: the first valid split in lexicographic order
    of boundary positions.

    :param children: the sub-regexes, in order
    :param text: the string to split
    :return: the pieces, or None if no split exists
    """
    failed: set[tuple[int, int]] = set()

    def search(index: int, start: int) -> tuple[str, ...] | None:
        if index == len(children) - 1:
            rest = text[start:]
            return (rest,) if matches(children[index], rest) else None
        if (index, start) in failed:
            return None
        for end in range(start, len(text) + 1):
            if matches(children[index], text[start:end]):
                tail = search(index + 1, end)
                if tail is not None:
                    return (text[start:end],) + tail
        failed.add((index, start))
        return None

    return search(0, 0)


def oracle_segment(gt: Concat, positives: tuple[str, ...]) -> Segmentation:
    """
    Splits every string along the children of a concatenation.

    :param gt: a concatenation
    :param positives: strings the concatenation accepts
    :return: one split per string, columns hinted with their child
    :raises SegmentationFailure: if a string has no valid split
    """
    splits = []
    for text in positives:
        split = split_along(gt.children, text)
        if split is None:
            raise SegmentationFailure(f"{text!r} cannot be split along {serialize(gt)!r}")
        splits.append(split)
    return Segmentation(tuple(splits), gt.children)


def oracle_suite(gt: RegexAst, config: SynthesisConfig | None = None, leaf: LeafMode = LeafMode.ENUMERATIVE) -> StrategySuite:
    """
    Builds the suite that decomposes along a known ground truth. The ground
    truth travels down the derivation as the hint of each node.

    :param gt: the canonical ground truth
    :param config: budgets for the enumerative leaves
    :param leaf: how leaves are solved
    :return: the suite
    """
    config = config or SynthesisConfig()

    def route(examples: ExampleSet, prev: RouterAction | None, hint: RegexAst | None) -> RouterAction:
        return oracle_router(hint)

    def partition(positives: tuple[str, ...], hint: RegexAst | None) -> Partition:
        if not isinstance(hint, Union):
            return Partition((positives,))
        return oracle_partition(hint, positives)

    def segment(positives: tuple[str, ...], hint: RegexAst | None) -> Segmentation:
        if not isinstance(hint, Concat):
            return unsplit(positives)
        return oracle_segment(hint, positives)

    def base(examples: ExampleSet, hint: RegexAst | None) -> RegexAst | None:
        if leaf == LeafMode.GROUND_TRUTH and hint is not None:
            if all(matches(hint, text) for text in examples.positives) and \
                    not any(matches(hint, text) for text in examples.negatives):
                return hint
            logger.debug(f"Ground-truth leaf {serialize(hint)!r} does not fit its examples")
        return enumerative_base(examples.positives, examples.negatives, config.base_budget, config.base_max_cost, config.class_cost)

    return StrategySuite(f"oracle-{leaf}", route, partition, segment, base, root_hint=gt)
