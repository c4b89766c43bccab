from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np

from ..canon.optimizer import canonicalize
from ..config import ClassCost
from ..regex.nodes import INFINITY, CharClass, Concat, Literal, RegexAst, Repetition, Union, walk
from ..regex.serializer import serialize
from .fallback import LADDER, ladder_rank

logger = logging.getLogger(__name__)

_QUANTIFIERS = ((0, INFINITY), (1, INFINITY), (0, 1))


class _Spans:
    """
    Signatures of candidate regexes over a fixed list of strings. The
    signature of R holds, per string s, the boolean matrix M with M[i, j]
    set iff R matches s[i:j]. Signatures compose like the operators do, so
    two candidates with equal signatures behave identically inside any
    larger candidate (observational equivalence).

    :param strings: every example string, positives first
    """

    def __init__(self, strings: tuple[str, ...]):
        self.strings = strings
        self.identity = tuple(np.eye(len(text) + 1, dtype=bool) for text in strings)

    def chars(self, members: frozenset[str]) -> tuple[np.ndarray, ...]:
        signature = []
        for text in self.strings:
            matrix = np.zeros((len(text) + 1, len(text) + 1), dtype=bool)
            for index, char in enumerate(text):
                matrix[index, index + 1] = char in members
            signature.append(matrix)
        return tuple(signature)

    @staticmethod
    def concat(left, right) -> tuple[np.ndarray, ...]:
        return tuple((a.astype(np.int32) @ b.astype(np.int32)) > 0 for a, b in zip(left, right))

    @staticmethod
    def union(left, right) -> tuple[np.ndarray, ...]:
        return tuple(a | b for a, b in zip(left, right))

    def repeat(self, signature, low: int, high: int | float) -> tuple[np.ndarray, ...]:
        if high == 1:
            return self.union(self.identity, signature)
        result = []
        for identity, matrix in zip(self.identity, signature):
            step = matrix.astype(np.int32)
            closure = identity | matrix
            while True:
                grown = closure | ((closure.astype(np.int32) @ step) > 0)
                if np.array_equal(grown, closure):
                    break
                closure = grown
            if low == 1:
                closure = (step @ closure.astype(np.int32)) > 0
            result.append(closure)
        return tuple(result)


def _branches(ast: RegexAst) -> tuple[RegexAst, ...]:
    return ast.children if isinstance(ast, Union) else (ast,)


@dataclass
class _Candidate:
    ast: RegexAst
    cost: int
    signature: tuple[np.ndarray, ...]
    key: tuple

    @property
    def fingerprint(self) -> bytes:
        return b"".join(matrix.tobytes() for matrix in self.signature)


def specificity_key(ast: RegexAst) -> tuple:
    """
    Orders equally costly candidates from specific to general: the broadest
    class used (by ladder rank, literals first), then the number of *, +
    and ? quantifiers, then the printed length and text.

    :param ast: a candidate
    :return: the sort key
    """
    nodes = list(walk(ast))
    broadest = max((ladder_rank(node.chars) for node in nodes if isinstance(node, CharClass)), default=0)
    repetitions = [(node.min, node.max) for node in nodes if isinstance(node, Repetition)]
    text = serialize(ast)
    return (
        broadest,
        repetitions.count((0, INFINITY)),
        repetitions.count((1, INFINITY)),
        repetitions.count((0, 1)),
        len(text),
        text,
    )


class _Enumerator:
    """
    Bottom-up enumeration by expression cost with observational-equivalence
    pruning.
    """

    def __init__(self, positives: tuple[str, ...], negatives: tuple[str, ...], budget: int, class_cost: ClassCost):
        self.positives = positives
        self.negatives = negatives
        self.spans = _Spans(positives + negatives)
        self.budget = budget
        self.class_cost = class_cost
        self.built = 0
        self.seen: set[bytes] = set()
        self.levels: dict[int, list[_Candidate]] = {}

    def _make(self, ast: RegexAst, cost: int, signature) -> _Candidate:
        self.built += 1
        return _Candidate(ast, cost, signature, specificity_key(ast))

    def _atoms(self, cost: int) -> list[_Candidate]:
        atoms = []
        for char in sorted(set("".join(self.positives))):
            if cost == 1:
                atoms.append(self._make(Literal(char), 1, self.spans.chars(frozenset(char))))
        for chars in LADDER:
            price = 1 if self.class_cost == ClassCost.UNIT else len(chars)
            if price == cost:
                atoms.append(self._make(CharClass(chars), price, self.spans.chars(chars)))
        return atoms

    def _combinations(self, cost: int) -> list[_Candidate]:
        built = []
        for left_cost in range(1, cost):
            right_cost = cost - left_cost
            for left_index, left in enumerate(self.levels.get(left_cost, [])):
                for right_index, right in enumerate(self.levels.get(right_cost, [])):
                    if self.built > self.budget:
                        return built
                    if not isinstance(left.ast, Concat):
                        tail = right.ast.children if isinstance(right.ast, Concat) else (right.ast,)
                        built.append(self._make(
                            Concat((left.ast,) + tail), cost, self.spans.concat(left.signature, right.signature)
                        ))
                    if (left_cost, left_index) < (right_cost, right_index):
                        branches = _branches(left.ast) + _branches(right.ast)
                        built.append(self._make(
                            Union(branches), cost, self.spans.union(left.signature, right.signature)
                        ))
        return built

    def _useful(self, candidate: _Candidate) -> bool:
        # never matching anything, or matching only empty spans, adds nothing
        return any(matrix.any() for matrix in candidate.signature) and not all(
            np.array_equal(matrix, identity) for matrix, identity in zip(candidate.signature, self.spans.identity)
        )

    def _distinct(self, candidates: list[_Candidate]) -> list[_Candidate]:
        kept = []
        local: set[bytes] = set()
        for candidate in sorted(candidates, key=lambda c: c.key):
            fingerprint = candidate.fingerprint
            if fingerprint in self.seen or fingerprint in local or not self._useful(candidate):
                continue
            local.add(fingerprint)
            kept.append(candidate)
        return kept

    def level(self, cost: int) -> list[_Candidate]:
        """
        Builds every observationally distinct candidate of one cost,
        quantified variants included.

        :param cost: the expression cost
        :return: the new candidates, most specific first
        """
        plain = self._distinct(self._atoms(cost) + self._combinations(cost))
        quantified = [
            self._make(Repetition(candidate.ast, low, high), cost, self.spans.repeat(candidate.signature, low, high))
            for candidate in plain
            if not isinstance(candidate.ast, Repetition)
            for low, high in _QUANTIFIERS
        ]
        candidates = self._distinct(plain + quantified)
        self.seen.update(candidate.fingerprint for candidate in candidates)
        self.levels[cost] = candidates
        return candidates

    def consistent(self, candidate: _Candidate) -> bool:
        accepted = [matrix[0, -1] for matrix in candidate.signature]
        count = len(self.positives)
        return all(accepted[:count]) and not any(accepted[count:])


def enumerative_base(
        positives: tuple[str, ...],
        negatives: tuple[str, ...] = (),
        budget: int = 20000,
        max_cost: int = 6,
        class_cost: ClassCost = ClassCost.UNIT) -> RegexAst | None:
    """
    Finds a cheapest consistent regex by bottom-up enumeration. Candidates
    are built from the fallback-ladder classes, the characters of the
    positives, concatenation, union and the *, + and ? quantifiers, in order
    of expression cost. Among equally cheap consistent candidates the most
    specific one wins.

    :param positives: strings to accept
    :param negatives: strings to reject
    :param budget: the most candidates to build
    :param max_cost: the largest expression cost to explore
    :param class_cost: the cost convention for character classes
    :return: the canonicalized regex, None when the budget or cost bound runs out
    """
    enumerator = _Enumerator(tuple(positives), tuple(negatives), budget, class_cost)
    for cost in range(1, max_cost + 1):
        for candidate in enumerator.level(cost):
            if enumerator.consistent(candidate):
                logger.debug(f"Enumerated {serialize(candidate.ast)!r} at cost {cost} after {enumerator.built} candidates")
                return canonicalize(candidate.ast)
        if enumerator.built > budget:
            logger.debug(f"Enumeration budget of {budget} spent at cost {cost}")
            return None
    return None
