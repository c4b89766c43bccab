from __future__ import annotations

import logging
from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterable

from ..errors import BudgetExceeded
from ..regex.nodes import Concat, Empty, Literal, RegexAst, Repetition, Union, union_of
from ..regex.serializer import serialize

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LanguageCost:
    """
    The language expression cost of a string set.

    :param cost: the exact minimum, None when the search ran out of budget
    :param witness: a finite-language regex of that cost accepting every string
    :param bound: an upper bound, equal to cost when the search finished
    """

    cost: int | None
    witness: RegexAst | None
    bound: int

    @property
    def exact(self) -> bool:
        return self.cost is not None


def _join(head: RegexAst, tail: RegexAst) -> RegexAst:
    parts = []
    for part in (head, tail):
        if isinstance(part, Concat):
            parts.extend(part.children)
        elif not isinstance(part, Empty):
            parts.append(part)
    if len(parts) == 1:
        return parts[0]
    if len(parts) == 2 and all(isinstance(part, Literal) for part in parts):
        return Literal(parts[0].text + parts[1].text)
    return Concat(tuple(parts))


def _alternate(first: RegexAst, second: RegexAst) -> RegexAst:
    if isinstance(first, Empty):
        return Repetition(second, 0, 1)
    if isinstance(second, Empty):
        return Repetition(first, 0, 1)
    return union_of([first, second])


class _CoverSearch:
    """
    Memoized search for the cheapest regex covering a set of strings, using
    only concatenation, union and option. Every cover of a set either
    splits it between two union branches or splits every string into a
    head and a tail covered by two concatenated regexes.
    """

    def __init__(self, budget: int):
        self.budget = budget
        self.steps = 0
        self.memo: dict[frozenset[str], tuple[int, RegexAst]] = {}

    def _tick(self) -> None:
        self.steps += 1
        if self.steps > self.budget:
            raise BudgetExceeded(f"Expression search took more than {self.budget} steps")

    def cover(self, strings: frozenset[str]) -> tuple[int, RegexAst]:
        if strings in self.memo:
            return self.memo[strings]
        if strings == frozenset({""}):
            best = (0, Empty())
        elif len(strings) == 1:
            (text,) = strings
            best = (len(text), Literal(text))
        else:
            best = None
            for candidate in self._unions(strings):
                if best is None or candidate[0] < best[0]:
                    best = candidate
            for candidate in self._concats(strings):
                if candidate[0] < best[0]:
                    best = candidate
        self.memo[strings] = best
        return best

    def _unions(self, strings: frozenset[str]):
        ordered = sorted(strings)
        first, rest = ordered[0], ordered[1:]
        for size in range(len(rest)):
            for chosen in combinations(rest, size):
                self._tick()
                left = frozenset((first,) + chosen)
                right = strings - left
                left_cost, left_regex = self.cover(left)
                right_cost, right_regex = self.cover(right)
                yield left_cost + right_cost, _alternate(left_regex, right_regex)

    def _concats(self, strings: frozenset[str]):
        ordered = sorted(strings)
        seen = set()
        for cuts in product(*(range(len(text) + 1) for text in ordered)):
            if all(cut == len(text) for cut, text in zip(cuts, ordered)) or not any(cuts):
                continue
            heads = frozenset(text[:cut] for cut, text in zip(cuts, ordered))
            tails = frozenset(text[cut:] for cut, text in zip(cuts, ordered))
            if (heads, tails) in seen:
                continue
            seen.add((heads, tails))
            self._tick()
            head_cost, head_regex = self.cover(heads)
            tail_cost, tail_regex = self.cover(tails)
            yield head_cost + tail_cost, _join(head_regex, tail_regex)


def language_expression_cost(strings: Iterable[str], budget: int = 200000) -> LanguageCost:
    """
    Computes the smallest expression cost of a finite-language regex, built
    from concatenation, union and option over the symbols of the strings,
    whose language contains every string.

    :param strings: the strings
    :param budget: the most split steps the search may take
    :return: the cost and a witness, or an unknown cost with the trivial bound
    """
    strings = frozenset(strings)
    bound = sum(len(text) for text in strings)
    if not strings:
        return LanguageCost(0, Empty(), 0)
    search = _CoverSearch(budget)
    try:
        cost, witness = search.cover(strings)
    except BudgetExceeded as e:
        logger.warning(f"Language expression cost unknown: {e}")
        return LanguageCost(None, None, bound)
    logger.debug(f"Language expression cost {cost} via {serialize(witness)!r} after {search.steps} steps")
    return LanguageCost(cost, witness, cost)
