from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from ..errors import BudgetExceeded

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Alignment:
    """
    A multi-string alignment. Tuple j holds, for every string, either the
    symbol it contributes at step j or None (a gap). Every tuple carries
    one symbol and at least one string contributes it.

    :param strings: the aligned strings, in order
    :param tuples: the alignment columns
    """

    strings: tuple[str, ...]
    tuples: tuple[tuple[str | None, ...], ...]

    @property
    def cost(self) -> int:
        return len(self.tuples)

    def supersequence(self) -> str:
        return "".join(next(entry for entry in column if entry is not None) for column in self.tuples)

    def is_valid(self) -> bool:
        """
        Checks the alignment laws: no all-gap column, one symbol per column
        and every string rebuilt from its entries.
        """
        for column in self.tuples:
            symbols = {entry for entry in column if entry is not None}
            if len(symbols) != 1 or len(column) != len(self.strings):
                return False
        return all(
            "".join(column[index] for column in self.tuples if column[index] is not None) == text
            for index, text in enumerate(self.strings)
        )


def optimal_alignment(strings: Iterable[str], budget: int = 200000) -> tuple[Alignment, int]:
    """
    Computes a minimum-length alignment by breadth-first search over the
    vectors of positions reached in each string. A step emits one symbol and
    advances every string whose next character it is. Symbols are tried in
    sorted order, so among the optimal alignments the one whose
    supersequence is lexicographically smallest is returned.

    :param strings: the strings, duplicates ignored
    :param budget: the most position vectors to visit
    :return: the alignment and its cost
    :raises BudgetExceeded: if the search visits more vectors than the budget allows
    """
    strings = tuple(dict.fromkeys(strings))
    start = (0,) * len(strings)
    goal = tuple(len(text) for text in strings)
    parents: dict[tuple[int, ...], tuple[tuple[int, ...], str] | None] = {start: None}
    queue = deque([start])
    while queue and goal not in parents:
        state = queue.popleft()
        symbols = sorted({text[at] for text, at in zip(strings, state) if at < len(text)})
        for symbol in symbols:
            following = tuple(
                at + 1 if at < len(text) and text[at] == symbol else at
                for text, at in zip(strings, state)
            )
            if following in parents:
                continue
            parents[following] = (state, symbol)
            if len(parents) > budget:
                raise BudgetExceeded(
                    f"Alignment search visited more than {budget} states",
                    sum(len(text) for text in strings),
                )
            queue.append(following)
    columns = []
    state = goal
    while parents[state] is not None:
        previous, symbol = parents[state]
        columns.append(tuple(symbol if now != then else None for now, then in zip(state, previous)))
        state = previous
    alignment = Alignment(strings, tuple(reversed(columns)))
    logger.debug(f"Aligned {len(strings)} strings at cost {alignment.cost} after {len(parents)} states")
    return alignment, alignment.cost


def lcs_length(x: str, y: str) -> int:
    """
    Computes the length of the longest common subsequence.
    """
    previous = np.zeros(len(y) + 1, dtype=np.int64)
    codes = np.fromiter(map(ord, y), dtype=np.int64, count=len(y))
    for char in x:
        candidates = previous.copy()
        candidates[1:] = np.maximum(previous[1:], previous[:-1] + (codes == ord(char)))
        # rows never decrease left to right
        previous = np.maximum.accumulate(candidates)
    return int(previous[-1])


def scs_length(x: str, y: str) -> int:
    """
    Computes the length of the shortest common supersequence of two strings.

    :param x: the first string
    :param y: the second string
    :return: |x| + |y| - LCS(x, y)
    """
    return len(x) + len(y) - lcs_length(x, y)
