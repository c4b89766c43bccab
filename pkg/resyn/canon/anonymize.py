from __future__ import annotations

import logging
import random
from dataclasses import dataclass, field
from enum import IntEnum

from ..errors import TokenExhaustion
from ..regex.alphabet import TOKEN_CODES
from ..regex.nodes import Concat, Literal, RegexAst, Repetition, Union, walk
from ..regex.serializer import serialize

logger = logging.getLogger(__name__)

# Every literal collapses to this character when only the shape matters.
PLACEHOLDER = "\x00"


class ReservedToken(IntEnum):
    """
    Codes that are never handed out as literal tokens.
    """

    PAD = 0
    EPSILON = 1
    SEPARATOR = 2


@dataclass(frozen=True)
class AnonymizationMap:
    """
    A bijection between replaced literals and their single-character tokens.

    :param tokens: each replaced literal mapped to its token character
    """

    tokens: dict[str, str] = field(default_factory=dict)

    def __len__(self) -> int:
        return len(self.tokens)

    def inverse(self) -> dict[str, str]:
        return {token: text for text, token in self.tokens.items()}

    def codes(self) -> dict[str, int]:
        return {text: ord(token) for text, token in self.tokens.items()}


def _replace_literals(ast: RegexAst, substitute) -> RegexAst:
    if isinstance(ast, Literal):
        return substitute(ast)
    if isinstance(ast, Repetition):
        return Repetition(_replace_literals(ast.child, substitute), ast.min, ast.max)
    if isinstance(ast, (Concat, Union)):
        return type(ast)(tuple(_replace_literals(child, substitute) for child in ast.children))
    return ast


def anonymize_literals(ast: RegexAst, seed: int | None = None) -> tuple[RegexAst, AnonymizationMap]:
    """
    Replaces every literal of two or more characters with a one-character
    token. Tokens are drawn at random (seeded) from the 25 token codes, so
    the same literal gets different tokens in different instances.

    :param ast: a canonical tree
    :param seed: the seed for the token assignment
    :return: the anonymized tree and the literal-to-token map
    :raises TokenExhaustion: if there are more than 25 distinct long literals
    """
    literals = list(dict.fromkeys(
        node.text for node in walk(ast) if isinstance(node, Literal) and len(node.text) >= 2
    ))
    if len(literals) > len(TOKEN_CODES):
        raise TokenExhaustion(f"{len(literals)} distinct literals but only {len(TOKEN_CODES)} tokens")
    codes = random.Random(seed).sample(TOKEN_CODES, len(literals))
    mapping = AnonymizationMap({text: chr(code) for text, code in zip(literals, codes)})
    anonymized = _replace_literals(
        ast,
        lambda node: Literal(mapping.tokens[node.text]) if node.text in mapping.tokens else node
    )
    logger.debug(f"Anonymized {len(literals)} literals of {serialize(ast)!r}")
    return anonymized, mapping


def restore_literals(ast: RegexAst, mapping: AnonymizationMap) -> RegexAst:
    """
    Undoes anonymize_literals.

    :param ast: an anonymized tree
    :param mapping: the map returned with it
    :return: the tree with the original literals
    """
    inverse = mapping.inverse()
    return _replace_literals(ast, lambda node: Literal(inverse.get(node.text, node.text)))


def abstract_literals(ast: RegexAst) -> RegexAst:
    return _replace_literals(ast, lambda _: Literal(PLACEHOLDER))


def structure_signature(ast: RegexAst) -> str:
    """
    Describes the shape of a tree with its concrete literals abstracted away.
    Two canonical trees get the same signature when they differ only in the
    text of their literals.

    :param ast: a canonical tree
    :return: the signature
    """
    return serialize(abstract_literals(ast))
