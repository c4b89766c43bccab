from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum, auto

from ..canon.optimizer import canonicalize
from ..exampleset import ExampleSet
from ..regex.nodes import RegexAst, concat_of, union_of
from ..regex.serializer import serialize


class LeafSource(Enum):
    """
    Where the regex of a leaf came from.
    """

    BASE = auto(), "base"
    FALLBACK = auto(), "fallback"
    SINGLETON = auto(), "singleton"
    FAILED = auto(), "failed"

    def __new__(cls, *args, **kwargs):
        obj = object.__new__(cls)
        obj._value_ = args[0]
        return obj

    def __init__(self, _: int, label: str = ""):
        self._label = label

    def __str__(self):
        return self._label


class DerivationNode:
    """
    A node of the derivation tree. Every node keeps the example set it
    was asked to solve.
    """

    examples: ExampleSet

    def children_of(self) -> tuple[DerivationNode, ...]:
        return ()

    def failed(self) -> bool:
        return any(child.failed() for child in self.children_of())

    def walk(self):
        """
        Yields this node and every node below it in pre-order.
        """
        yield self
        for child in self.children_of():
            yield from child.walk()

    def to_dict(self) -> dict:
        raise NotImplementedError


def _examples_dict(examples: ExampleSet) -> dict:
    return {"positives": list(examples.positives), "negatives": list(examples.negatives)}


@dataclass
class Leaf(DerivationNode):
    """
    A sub-problem solved directly.

    :param examples: the local examples
    :param regex: the solution, None when nothing fit
    :param source: how the solution was found
    :param abandoned: a decomposition tried first and given up because part of it failed
    """

    examples: ExampleSet
    regex: RegexAst | None
    source: LeafSource
    abandoned: DerivationNode | None = None

    def failed(self) -> bool:
        return self.source == LeafSource.FAILED

    def to_dict(self) -> dict:
        data = {
            "node": "leaf",
            "source": str(self.source),
            "regex": serialize(self.regex) if self.regex is not None else None,
            "examples": _examples_dict(self.examples),
        }
        if self.abandoned is not None:
            data["abandoned"] = self.abandoned.to_dict()
        return data


@dataclass
class ConcatNode(DerivationNode):
    """
    A segmentation: child i solves column i.
    """

    examples: ExampleSet
    children: tuple[DerivationNode, ...] = field(default_factory=tuple)

    def children_of(self) -> tuple[DerivationNode, ...]:
        return self.children

    def to_dict(self) -> dict:
        return {
            "node": "concat",
            "examples": _examples_dict(self.examples),
            "children": [child.to_dict() for child in self.children],
        }


@dataclass
class UnionNode(DerivationNode):
    """
    A partition: child i solves group i.
    """

    examples: ExampleSet
    children: tuple[DerivationNode, ...] = field(default_factory=tuple)

    def children_of(self) -> tuple[DerivationNode, ...]:
        return self.children

    def to_dict(self) -> dict:
        return {
            "node": "union",
            "examples": _examples_dict(self.examples),
            "children": [child.to_dict() for child in self.children],
        }


def _assemble(node: DerivationNode) -> RegexAst:
    if isinstance(node, Leaf):
        if node.regex is None:
            raise ValueError("Cannot compose a derivation with a failed leaf")
        return node.regex
    parts = [_assemble(child) for child in node.children_of()]
    if isinstance(node, ConcatNode):
        return concat_of(parts)
    return union_of(parts)


def compose(tree: DerivationNode) -> RegexAst:
    """
    Builds the regex a derivation describes: concatenation nodes join their
    children in order, union nodes alternate them, and the result is
    canonicalized without changing its language.

    :param tree: a derivation whose leaves all hold a regex
    :return: the composed regex
    """
    return canonicalize(_assemble(tree))
