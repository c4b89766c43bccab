from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable

from .nodes import CharClass, Concat, Empty, Literal, RegexAst, Repetition, Union


@dataclass(eq=False)
class Nfa:
    """
    A Thompson automaton. State 0 is the start; `accept` is the single
    accepting state. Each state holds a list of (label, target) edges where
    a None label is an epsilon move and a set label consumes one character.

    :param edges: the outgoing edges of each state
    :param accept: the accepting state
    """

    edges: list[list[tuple[frozenset[str] | None, int]]] = field(default_factory=list)
    accept: int = 0

    def new_state(self) -> int:
        self.edges.append([])
        return len(self.edges) - 1

    def connect(self, source: int, target: int, label: frozenset[str] | None = None) -> None:
        self.edges[source].append((label, target))

    def closure(self, states: set[int]) -> frozenset[int]:
        """
        Extends a state set with everything reachable through epsilon moves.

        :param states: the seed states
        :return: the closed set
        """
        stack = list(states)
        seen = set(states)
        while stack:
            state = stack.pop()
            for label, target in self.edges[state]:
                if label is None and target not in seen:
                    seen.add(target)
                    stack.append(target)
        return frozenset(seen)

    def step(self, states: frozenset[int], char: str) -> frozenset[int]:
        moved = {
            target
            for state in states
            for label, target in self.edges[state]
            if label is not None and char in label
        }
        return self.closure(moved)

    def accepts(self, text: str) -> bool:
        """
        Runs the automaton over a whole string.

        :param text: the input
        :return: True if the automaton ends in its accepting state
        """
        current = self.closure({0})
        for char in text:
            if not current:
                return False
            current = self.step(current, char)
        return self.accept in current


def _build(nfa: Nfa, node: RegexAst) -> tuple[int, int]:
    """
    Adds the fragment for a node to the automaton.

    :param nfa: the automaton under construction
    :param node: the node to translate
    :return: the (entry, exit) states of the fragment
    """
    if isinstance(node, Empty):
        state = nfa.new_state()
        return state, state
    if isinstance(node, Literal):
        entry = current = nfa.new_state()
        for char in node.text:
            following = nfa.new_state()
            nfa.connect(current, following, frozenset(char))
            current = following
        return entry, current
    if isinstance(node, CharClass):
        entry, exit_ = nfa.new_state(), nfa.new_state()
        nfa.connect(entry, exit_, node.chars)
        return entry, exit_
    if isinstance(node, Concat):
        entry, current = _build(nfa, node.children[0])
        for child in node.children[1:]:
            child_entry, child_exit = _build(nfa, child)
            nfa.connect(current, child_entry)
            current = child_exit
        return entry, current
    if isinstance(node, Union):
        entry, exit_ = nfa.new_state(), nfa.new_state()
        for child in node.children:
            child_entry, child_exit = _build(nfa, child)
            nfa.connect(entry, child_entry)
            nfa.connect(child_exit, exit_)
        return entry, exit_
    if isinstance(node, Repetition):
        return _build_repetition(nfa, node)
    raise TypeError(f"Unknown node type {type(node).__name__}")


def _build_repetition(nfa: Nfa, node: Repetition) -> tuple[int, int]:
    # interval bounds are unrolled into copies: min mandatory ones, then
    # optional ones (or a loop when unbounded)
    entry = current = nfa.new_state()
    for _ in range(node.min):
        child_entry, child_exit = _build(nfa, node.child)
        nfa.connect(current, child_entry)
        current = child_exit
    exit_ = nfa.new_state()
    if node.is_unbounded():
        loop_entry, loop_exit = _build(nfa, node.child)
        nfa.connect(current, loop_entry)
        nfa.connect(loop_exit, loop_entry)
        nfa.connect(loop_exit, exit_)
        nfa.connect(current, exit_)
        return entry, exit_
    for _ in range(int(node.max) - node.min):
        child_entry, child_exit = _build(nfa, node.child)
        nfa.connect(current, exit_)
        nfa.connect(current, child_entry)
        current = child_exit
    nfa.connect(current, exit_)
    return entry, exit_


@lru_cache(maxsize=4096)
def compile_nfa(ast: RegexAst) -> Nfa:
    """
    Translates a tree into an automaton. Results are cached per tree.

    :param ast: the tree
    :return: the automaton
    """
    nfa = Nfa()
    entry, exit_ = _build(nfa, ast)
    assert entry == 0
    nfa.accept = exit_
    return nfa


def nfa_size(ast: RegexAst) -> int:
    return len(compile_nfa(ast).edges)


def matches(ast: RegexAst, text: str) -> bool:
    """
    Decides full-string membership: True iff the whole of `text` is in the
    language of `ast`. The dot matches every alphabet symbol (newlines
    included) and \\s never matches a vertical tab.

    :param ast: the tree
    :param text: the candidate string
    :return: True if the string belongs to the language
    """
    return compile_nfa(ast).accepts(text)


def consistent(regex: RegexAst, positives: Iterable[str], negatives: Iterable[str] = ()) -> bool:
    """
    Checks that a regex accepts every positive and rejects every negative.

    :param regex: the regex
    :param positives: strings to accept
    :param negatives: strings to reject
    :return: True if the regex classifies every example correctly
    """
    compiled = compile_nfa(regex)
    return all(compiled.accepts(text) for text in positives) and not any(compiled.accepts(text) for text in negatives)
