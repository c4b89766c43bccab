from __future__ import annotations

import heapq
import logging
from dataclasses import dataclass
from typing import Iterable

from ..errors import BudgetExceeded

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DecompositionWitness:
    """
    Shared pieces from which every string is rebuilt. String i is the
    concatenation of the pieces listed in maps[i] (1-based, strictly
    increasing), so pieces are used in order and at most once per string.

    :param strings: the decomposed strings
    :param pieces: x_1 ... x_m
    :param maps: the piece indices used by each string
    """

    strings: tuple[str, ...]
    pieces: tuple[str, ...]
    maps: tuple[tuple[int, ...], ...]

    @property
    def cost(self) -> int:
        return sum(len(piece) for piece in self.pieces)

    def is_valid(self) -> bool:
        for text, indices in zip(self.strings, self.maps):
            if any(later <= earlier for earlier, later in zip(indices, indices[1:])):
                return False
            if "".join(self.pieces[index - 1] for index in indices) != text:
                return False
        return len(self.maps) == len(self.strings)


def decomposition_cost(strings: Iterable[str], budget: int = 200000) -> tuple[DecompositionWitness, int]:
    """
    Finds the cheapest list of pieces that rebuilds every string, searching
    piece lists directly with Dijkstra's algorithm. From a vector of
    positions reached, a piece is any non-empty prefix of some string's
    remainder; it advances every string whose remainder starts with it.
    Ties are broken by fewer pieces, then by the lexicographically smallest
    piece list.

    :param strings: the strings, duplicates ignored
    :param budget: the most position vectors to settle
    :return: the witness and its cost
    :raises BudgetExceeded: if more vectors than the budget allows are settled
    """
    strings = tuple(dict.fromkeys(strings))
    start = (0,) * len(strings)
    goal = tuple(len(text) for text in strings)
    frontier = [(0, 0, (), start)]
    settled: set[tuple[int, ...]] = set()
    while frontier:
        cost, count, pieces, state = heapq.heappop(frontier)
        if state in settled:
            continue
        if state == goal:
            witness = _witness(strings, pieces)
            logger.debug(f"Decomposed {len(strings)} strings at cost {cost} after {len(settled)} states")
            return witness, cost
        settled.add(state)
        if len(settled) > budget:
            raise BudgetExceeded(
                f"Decomposition search settled more than {budget} states",
                sum(len(text) for text in strings),
            )
        candidates = {
            text[at:end]
            for text, at in zip(strings, state)
            for end in range(at + 1, len(text) + 1)
        }
        for piece in candidates:
            following = tuple(
                at + len(piece) if text.startswith(piece, at) else at
                for text, at in zip(strings, state)
            )
            if following not in settled:
                heapq.heappush(frontier, (cost + len(piece), count + 1, pieces + (piece,), following))
    raise AssertionError("The goal is always reachable")


def _witness(strings: tuple[str, ...], pieces: tuple[str, ...]) -> DecompositionWitness:
    maps = []
    for text in strings:
        at = 0
        indices = []
        for index, piece in enumerate(pieces, start=1):
            if text.startswith(piece, at):
                indices.append(index)
                at += len(piece)
        maps.append(tuple(indices))
    return DecompositionWitness(strings, pieces, tuple(maps))
