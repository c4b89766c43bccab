from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum, auto

INFINITY = math.inf


class RegexAst:
    """
    The common base of the six syntax tree node types. Nodes are frozen
    dataclasses, so two trees compare equal exactly when they have the
    same shape, and trees can be used as dictionary keys.
    """

    def children_of(self) -> tuple[RegexAst, ...]:
        """
        Retrieves the direct children of this node.

        :return: the children in order (empty for atomic nodes)
        """
        return ()

    def is_atomic(self) -> bool:
        return not self.children_of()


@dataclass(frozen=True)
class Empty(RegexAst):
    """
    The empty string (epsilon).
    """

    def __repr__(self) -> str:
        return "Empty()"


@dataclass(frozen=True)
class Literal(RegexAst):
    """
    A non-empty run of characters matched verbatim.

    :param text: the characters
    """

    text: str

    def __post_init__(self):
        if not self.text:
            raise ValueError("Literal text must be non-empty; use Empty for epsilon")


@dataclass(frozen=True)
class CharClass(RegexAst):
    """
    Exactly one character drawn from a set.

    :param chars: the allowed characters
    """

    chars: frozenset[str]

    def __post_init__(self):
        if not self.chars:
            raise ValueError("CharClass must allow at least one character")
        if not isinstance(self.chars, frozenset):
            object.__setattr__(self, "chars", frozenset(self.chars))

    def __repr__(self) -> str:
        return f"CharClass({''.join(sorted(self.chars))!r})"


@dataclass(frozen=True)
class Concat(RegexAst):
    """
    A sequence of at least two sub-expressions matched one after another.

    :param children: the ordered sub-expressions
    """

    children: tuple[RegexAst, ...]

    def __post_init__(self):
        object.__setattr__(self, "children", tuple(self.children))
        if len(self.children) < 2:
            raise ValueError("Concat needs at least two children")

    def children_of(self) -> tuple[RegexAst, ...]:
        return self.children


@dataclass(frozen=True)
class Union(RegexAst):
    """
    An alternation of at least two sub-expressions.

    :param children: the branches, in order
    """

    children: tuple[RegexAst, ...]

    def __post_init__(self):
        object.__setattr__(self, "children", tuple(self.children))
        if len(self.children) < 2:
            raise ValueError("Union needs at least two children")

    def children_of(self) -> tuple[RegexAst, ...]:
        return self.children


@dataclass(frozen=True)
class Repetition(RegexAst):
    """
    A quantified sub-expression matched between min and max times.

    :param child: the repeated sub-expression
    :param min: the lower bound
    :param max: the upper bound, INFINITY when unbounded
    """

    child: RegexAst
    min: int = 0
    max: int | float = INFINITY

    def __post_init__(self):
        if self.min < 0 or self.max < self.min:
            raise ValueError(f"Invalid repetition bounds {{{self.min},{self.max}}}")

    def children_of(self) -> tuple[RegexAst, ...]:
        return (self.child,)

    def is_unbounded(self) -> bool:
        return self.max == INFINITY


class TopLevelOperator(Enum):
    """
    The operator category reported for the root of a tree.

    :member ATOMIC: Empty and Literal roots.
    :member CHAR_CLASS: a single character class.
    :member CONCAT: a concatenation.
    :member REPETITION: a quantified expression.
    :member UNION: an alternation.
    """

    ATOMIC = auto(), "Atomic"
    CHAR_CLASS = auto(), "CharClass"
    CONCAT = auto(), "Concat"
    REPETITION = auto(), "Repetition"
    UNION = auto(), "Union"

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

    @staticmethod
    def of(ast: RegexAst) -> TopLevelOperator:
        """
        Classifies the root of a tree.

        :param ast: the tree
        :return: the operator category of its root
        """
        if isinstance(ast, CharClass):
            return TopLevelOperator.CHAR_CLASS
        if isinstance(ast, Concat):
            return TopLevelOperator.CONCAT
        if isinstance(ast, Union):
            return TopLevelOperator.UNION
        if isinstance(ast, Repetition):
            return TopLevelOperator.REPETITION
        return TopLevelOperator.ATOMIC


def concat_of(items: list[RegexAst]) -> RegexAst:
    """
    Builds the concatenation of a list of nodes, collapsing the degenerate
    cases: no items gives Empty and a single item is returned as is.

    :param items: the nodes to concatenate
    :return: the combined node
    """
    if not items:
        return Empty()
    if len(items) == 1:
        return items[0]
    return Concat(tuple(items))


def union_of(items: list[RegexAst]) -> RegexAst:
    """
    Builds the alternation of a list of nodes; a single item is returned as is.

    :param items: the branches
    :return: the combined node
    """
    if not items:
        raise ValueError("union_of needs at least one branch")
    if len(items) == 1:
        return items[0]
    return Union(tuple(items))


def walk(ast: RegexAst):
    """
    Yields every node of a tree in pre-order.

    :param ast: the root
    """
    stack = [ast]
    while stack:
        node = stack.pop()
        yield node
        stack.extend(reversed(node.children_of()))
