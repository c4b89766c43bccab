from __future__ import annotations

from dataclasses import dataclass
from enum import Enum, auto
from typing import Callable

from ..exampleset import ExampleSet
from ..regex.nodes import RegexAst


class RouterAction(Enum):
    """
    The three choices a router makes for an example set.

    :member SYNTHESIZE: solve the set directly with the base synthesizer.
    :member PARTITION: group the strings and solve each group (a union).
    :member SEGMENT: split every string into columns and solve each column (a concatenation).
    """

    SYNTHESIZE = auto(), "Synthesize"
    PARTITION = auto(), "Partition"
    SEGMENT = auto(), "Segment"

    def __new__(cls, *args, **kwargs):
        obj = object.__new__(cls)
        obj._value_ = args[0]
        return obj

    def __init__(self, _: int, label: str = ""):
        self._label = label

    def __str__(self):
        return self._label

    @property
    def label(self) -> str:
        return self._label


@dataclass(frozen=True)
class Partition:
    """
    A grouping of positive strings.

    :param groups: the groups, in order of first appearance
    :param hints: an optional sub-regex per group (only oracles supply them)
    """

    groups: tuple[tuple[str, ...], ...]
    hints: tuple[RegexAst | None, ...] = ()

    @property
    def m(self) -> int:
        return len(self.groups)

    def hint(self, index: int) -> RegexAst | None:
        return self.hints[index] if index < len(self.hints) else None

    def all_singletons(self) -> bool:
        return all(len(group) == 1 for group in self.groups)

    def is_partition_of(self, positives: tuple[str, ...]) -> bool:
        """
        Checks the partition laws: non-empty groups, pairwise disjoint,
        together covering exactly the positives.

        :param positives: the strings that were grouped
        :return: True if the laws hold
        """
        flat = [text for group in self.groups for text in group]
        return all(self.groups) and len(flat) == len(set(flat)) and set(flat) == set(positives)


@dataclass(frozen=True)
class Segmentation:
    """
    A split of every positive string into the same number of columns.

    :param splits: per string, its k segments
    :param hints: an optional sub-regex per column (only oracles supply them)
    """

    splits: tuple[tuple[str, ...], ...]
    hints: tuple[RegexAst | None, ...] = ()

    @property
    def k(self) -> int:
        return len(self.splits[0]) if self.splits else 1

    def hint(self, index: int) -> RegexAst | None:
        return self.hints[index] if index < len(self.hints) else None

    def columns(self) -> tuple[tuple[str, ...], ...]:
        """
        Transposes the splits: column i holds segment i of every string,
        duplicates removed.

        :return: one tuple of strings per column
        """
        return tuple(
            tuple(dict.fromkeys(split[index] for split in self.splits))
            for index in range(self.k)
        )

    def preserves(self, positives: tuple[str, ...]) -> bool:
        """
        Checks that every split rejoins to its string and all splits have k parts.

        :param positives: the strings that were split, in order
        :return: True if the segmentation is well formed
        """
        return len(self.splits) == len(positives) and all(
            len(split) == self.k and "".join(split) == text
            for split, text in zip(self.splits, positives)
        )


def unsplit(positives: tuple[str, ...]) -> Segmentation:
    return Segmentation(tuple((text,) for text in positives))


@dataclass(frozen=True)
class StrategySuite:
    """
    The pluggable parts of the recursive synthesizer. Each callable receives
    a hint: the ground-truth sub-regex for the current node when an oracle
    is driving, otherwise None.

    :param name: a label for reports
    :param router: picks an action for an example set, given the previous action
    :param partitioner: groups positive strings
    :param segmenter: splits positive strings into columns
    :param base: solves an example set directly, None on failure
    :param root_hint: the hint handed to the root node
    """

    name: str
    router: Callable[[ExampleSet, RouterAction | None, RegexAst | None], RouterAction]
    partitioner: Callable[[tuple[str, ...], RegexAst | None], Partition]
    segmenter: Callable[[tuple[str, ...], RegexAst | None], Segmentation]
    base: Callable[[ExampleSet, RegexAst | None], RegexAst | None]
    root_hint: RegexAst | None = None
