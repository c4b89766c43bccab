from __future__ import annotations

import logging
from dataclasses import dataclass

from ..exampleset import ExampleSet
from ..regex.alphabet import DIGITS, HEX, LETTERS, LOWER, NAMED_CLASSES, SIGMA, SPACE, UPPER, WORD
from ..regex.matcher import consistent
from ..regex.nodes import INFINITY, CharClass, RegexAst, Repetition

logger = logging.getLogger(__name__)

# Base classes from most to least specific.
LADDER: tuple[frozenset[str], ...] = (
    DIGITS,
    LOWER,
    UPPER,
    LETTERS,
    HEX,
    WORD,
    SPACE,
    NAMED_CLASSES["\\D"],
    NAMED_CLASSES["\\W"],
    NAMED_CLASSES["\\S"],
    SIGMA,
)


def ladder_rank(chars: frozenset[str]) -> int:
    """
    Ranks a character set by its position on the ladder, 1 for digits up to
    11 for the wildcard. Sets off the ladder rank past the wildcard.

    :param chars: the set
    :return: its rank
    """
    for index, members in enumerate(LADDER):
        if chars == members:
            return index + 1
    return len(LADDER) + 1


@dataclass(frozen=True)
class FallbackCandidate:
    """
    One rung of the fallback ladder.

    :param priority: the position in the search order, starting at 1
    :param regex: the class with its quantifier
    """

    priority: int
    regex: RegexAst

    def is_smaller(self, other: FallbackCandidate | None) -> bool:
        """
        Orders candidates by the size of their language. The ladder lists
        narrow classes before broad ones and + before *, so the search order
        itself is the order.

        :param other: the best candidate so far, None if there is none
        :return: True if this candidate describes the smaller language
        """
        return other is None or self.priority < other.priority


CANDIDATES: tuple[FallbackCandidate, ...] = tuple(
    FallbackCandidate(2 * index + offset + 1, Repetition(CharClass(chars), minimum, INFINITY))
    for index, chars in enumerate(LADDER)
    for offset, minimum in enumerate((1, 0))
)


def fallback_candidate(examples: ExampleSet) -> FallbackCandidate | None:
    """
    Searches the ladder and keeps the consistent candidate with the smallest
    language.

    :param examples: the examples to fit
    :return: the best candidate, None if none is consistent
    """
    best = None
    for candidate in CANDIDATES:
        if candidate.is_smaller(best) and consistent(candidate.regex, examples.positives, examples.negatives):
            best = candidate
    return best


def fallback_synthesize(examples: ExampleSet) -> RegexAst | None:
    """
    Fits the examples with a character class and a + or * quantifier, taking
    \\d, [a-z], [A-Z], [a-zA-Z], [0-9a-fA-F], \\w, \\s, \\D, \\W, \\S and .
    in that order.

    :param examples: the examples to fit
    :return: the most specific consistent pattern, None if there is none
    """
    best = fallback_candidate(examples)
    if best is None:
        logger.debug(f"No fallback pattern fits {len(examples.positives)} positives")
        return None
    return best.regex
