from __future__ import annotations

import logging
import random
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from ..regex.alphabet import SIGMA
from ..regex.matcher import matches
from ..regex.nodes import RegexAst
from ..regex.serializer import serialize

logger = logging.getLogger(__name__)

_SYMBOLS = tuple(sorted(SIGMA))


@dataclass(frozen=True)
class NegativeSample:
    """
    Hard negatives drawn for one example set.

    :param strings: the negatives, in the order they were found
    :param shortfall: how many of the requested negatives could not be found
    """

    strings: tuple[str, ...]
    shortfall: int = 0


def levenshtein(a: str, b: str) -> int:
    """
    Computes the edit distance between two strings (unit-cost insertion,
    deletion and substitution), one vectorized row per character of a.

    :param a: the first string
    :param b: the second string
    :return: the fewest edits turning a into b
    """
    previous = np.arange(len(b) + 1, dtype=np.int64)
    codes = np.fromiter(map(ord, b), dtype=np.int64, count=len(b))
    steps = np.arange(len(b) + 1, dtype=np.int64)
    for i, char in enumerate(a, start=1):
        candidates = np.empty_like(previous)
        candidates[0] = i
        candidates[1:] = np.minimum(previous[1:] + 1, previous[:-1] + (codes != ord(char)))
        # insertions chain left to right along the row
        previous = np.minimum.accumulate(candidates - steps) + steps
    return int(previous[-1])


def _edit(rng: random.Random, text: str) -> str:
    """
    Applies one random insertion, deletion or substitution.
    """
    operations = ["insert", "delete", "substitute"] if text else ["insert"]
    operation = rng.choice(operations)
    if operation == "insert":
        position = rng.randint(0, len(text))
        return text[:position] + rng.choice(_SYMBOLS) + text[position:]
    position = rng.randrange(len(text))
    if operation == "delete":
        return text[:position] + text[position + 1:]
    replacement = rng.choice([char for char in _SYMBOLS if char != text[position]])
    return text[:position] + replacement + text[position + 1:]


def mutate_negatives(
        ast: RegexAst,
        positives: Iterable[str],
        k: int,
        seed=None,
        retries: int = 200,
        exclude: Iterable[str] = ()) -> NegativeSample:
    """
    Produces hard negatives: strings one edit away from a positive that the
    regex rejects. Each slot gets its own retry budget; the first slot that
    spends it ends the search, and the missing count is reported.

    :param ast: the ground truth
    :param positives: the strings to mutate
    :param k: how many negatives to return at most
    :param seed: the seed for the edits
    :param retries: attempts per negative
    :param exclude: strings that may not be returned
    :return: the negatives and the shortfall
    """
    rng = random.Random(seed)
    pool = list(positives)
    banned = set(pool) | set(exclude)
    found: dict[str, None] = {}
    while pool and len(found) < k:
        for _ in range(retries):
            candidate = _edit(rng, rng.choice(pool))
            if candidate in banned or candidate in found or matches(ast, candidate):
                continue
            found[candidate] = None
            break
        else:
            break
    shortfall = k - len(found)
    if shortfall:
        logger.warning(f"Found only {len(found)} of {k} negatives for {serialize(ast)!r}")
    return NegativeSample(tuple(found), shortfall)
