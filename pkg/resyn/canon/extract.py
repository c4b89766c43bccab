from __future__ import annotations

from ..regex.nodes import Empty, RegexAst, walk
from .optimizer import canonicalize
from .rules import CanonMode


def extract_subregexes(ast: RegexAst, mode: CanonMode = CanonMode.PRESERVING) -> tuple[RegexAst, ...]:
    """
    Lists a regex and every sub-expression below it, each canonicalized,
    in pre-order with structural duplicates removed.

    :param ast: the regex
    :param mode: the canonicalization mode for the pieces
    :return: the original followed by its distinct sub-expressions
    """
    root = canonicalize(ast, mode)
    pieces = (canonicalize(node, mode) for node in walk(root))
    return tuple(dict.fromkeys(piece for piece in pieces if not isinstance(piece, Empty) or piece == root))
