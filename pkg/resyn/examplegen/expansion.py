from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Iterable

from ..regex.nodes import Concat, RegexAst, Union
from ..regex.serializer import serialize
from ..synth.oracle import oracle_partition, oracle_segment

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SubInstance:
    """
    A sub-regex paired with the pieces of the positives it is responsible for.

    :param ast: the sub-regex
    :param positives: the distinct pieces, in first-seen order
    """

    ast: RegexAst
    positives: tuple[str, ...]


def expand_substrings(gt: RegexAst, positives: Iterable[str], recursive: bool = False) -> list[SubInstance]:
    """
    Splits an instance along the root of its ground truth. A concatenation
    yields one sub-instance per child, holding column i of the oracle
    segmentation; a union yields one per branch that some string matches
    first. Any other root yields nothing.

    :param gt: the canonical ground truth
    :param positives: strings gt accepts
    :param recursive: also expand every sub-instance, depth first
    :return: the sub-instances
    :raises SegmentationFailure: if a string cannot be split along a concatenation
    :raises UnmatchedString: if a string matches no branch of a union
    """
    positives = tuple(dict.fromkeys(positives))
    if isinstance(gt, Concat):
        segmentation = oracle_segment(gt, positives)
        expanded = [
            SubInstance(child, tuple(dict.fromkeys(split[index] for split in segmentation.splits)))
            for index, child in enumerate(gt.children)
        ]
    elif isinstance(gt, Union):
        partition = oracle_partition(gt, positives)
        expanded = [SubInstance(partition.hint(index), group) for index, group in enumerate(partition.groups)]
    else:
        return []
    logger.debug(f"Expanded {serialize(gt)!r} into {len(expanded)} sub-instances")
    if not recursive:
        return expanded
    result = []
    for sub in expanded:
        result.append(sub)
        result.extend(expand_substrings(sub.ast, sub.positives, recursive=True))
    return result
