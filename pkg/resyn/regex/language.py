from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass
from functools import lru_cache

from .matcher import Nfa, compile_nfa
from .nodes import RegexAst

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BoundedLanguage:
    """
    The members of a language up to some length, in shortlex order.

    :param strings: the members found
    :param overflow: True if the enumeration stopped at the cap, so strings is partial
    """

    strings: tuple[str, ...]
    overflow: bool = False

    def __iter__(self):
        return iter(self.strings)

    def __len__(self) -> int:
        return len(self.strings)

    def __contains__(self, item: str) -> bool:
        return item in self.strings


@lru_cache(maxsize=1024)
def _distance_to_accept(nfa: Nfa) -> tuple[float, ...]:
    """
    Computes, for every state, the fewest characters needed to reach the
    accepting state (0-1 breadth first search on the reversed automaton).

    :param nfa: the automaton
    :return: the distance of each state, infinity if the accept is unreachable
    """
    reverse: list[list[tuple[int, int]]] = [[] for _ in nfa.edges]
    for source, edges in enumerate(nfa.edges):
        for label, target in edges:
            reverse[target].append((source, 0 if label is None else 1))
    distance = [float("inf")] * len(nfa.edges)
    distance[nfa.accept] = 0
    queue = deque([nfa.accept])
    while queue:
        state = queue.popleft()
        for source, weight in reverse[state]:
            if distance[state] + weight < distance[source]:
                distance[source] = distance[state] + weight
                if weight == 0:
                    queue.appendleft(source)
                else:
                    queue.append(source)
    return tuple(distance)


def enumerate_language(ast: RegexAst, max_len: int, cap: int) -> BoundedLanguage:
    """
    Lists every string of the language no longer than max_len. Prefixes that
    cannot be completed within the length bound are never explored, so the
    work stays proportional to the size of the answer.

    :param ast: the tree
    :param max_len: the longest string to report
    :param cap: the most strings to report before flagging an overflow
    :return: the members in shortlex order
    """
    nfa = compile_nfa(ast)
    distance = _distance_to_accept(nfa)
    found: list[str] = []
    level = [("", nfa.closure({0}))]
    for length in range(max_len + 1):
        following = []
        for prefix, states in level:
            if nfa.accept in states:
                found.append(prefix)
                if len(found) > cap:
                    logger.warning(f"Language enumeration overflowed its cap of {cap} strings")
                    return BoundedLanguage(tuple(found[:cap]), overflow=True)
            if length == max_len:
                continue
            symbols = sorted({
                char
                for state in states
                for label, _ in nfa.edges[state]
                if label is not None
                for char in label
            })
            for char in symbols:
                moved = nfa.step(states, char)
                if moved and length + 1 + min(distance[state] for state in moved) <= max_len:
                    following.append((prefix + char, moved))
        # every surviving prefix completes to a distinct member
        if len(following) > cap:
            logger.warning(f"Language enumeration overflowed its cap of {cap} strings")
            return BoundedLanguage(tuple(found), overflow=True)
        level = following
    return BoundedLanguage(tuple(found))
