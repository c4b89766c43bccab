from __future__ import annotations

from enum import Enum, auto

from .alphabet import CONTROL_ESCAPES, NAMED_CLASSES, SIGMA
from .nodes import CharClass, Concat, Empty, Literal, RegexAst, Repetition, Union

_METACHARACTERS = frozenset(".^$*+?()[]{}|\\")
_CLASS_METACHARACTERS = frozenset("\\]^-[")


class _Context(Enum):
    """
    Where a node is being printed; decides whether it needs a group.
    """

    TOP = auto()
    UNION = auto()
    CONCAT = auto()
    REPEAT = auto()


def escape_char(char: str) -> str:
    """
    Escapes one character for use outside a bracket expression.

    :param char: the character
    :return: its pattern text
    """
    if char in _METACHARACTERS:
        return "\\" + char
    if char in CONTROL_ESCAPES:
        return CONTROL_ESCAPES[char]
    if char not in SIGMA:
        return f"\\x{ord(char):02x}"
    return char


def _escape_class_char(char: str) -> str:
    if char in _CLASS_METACHARACTERS:
        return "\\" + char
    if char in CONTROL_ESCAPES:
        return CONTROL_ESCAPES[char]
    if char not in SIGMA:
        return f"\\x{ord(char):02x}"
    return char


def _bracket_body(chars: frozenset[str]) -> str:
    """
    Writes a character set as maximal runs of three or more consecutive
    code points (as ranges) and single characters.

    :param chars: the set
    :return: the text between the brackets
    """
    codes = sorted(ord(char) for char in chars)
    parts = []
    index = 0
    while index < len(codes):
        end = index
        while end + 1 < len(codes) and codes[end + 1] == codes[end] + 1:
            end += 1
        if end - index >= 2:
            parts.append(f"{_escape_class_char(chr(codes[index]))}-{_escape_class_char(chr(codes[end]))}")
        else:
            parts.extend(_escape_class_char(chr(code)) for code in codes[index:end + 1])
        index = end + 1
    return "".join(parts)


def serialize_class(chars: frozenset[str]) -> str:
    """
    Prints a character set as concisely as we can: a named class when one
    matches exactly, otherwise the shorter of the bracket and the negated
    bracket forms.

    :param chars: the set
    :return: the pattern text
    """
    for name, members in NAMED_CLASSES.items():
        if chars == members:
            return name
    positive = f"[{_bracket_body(chars)}]"
    if chars <= SIGMA and len(chars) > len(SIGMA) // 2:
        negative = f"[^{_bracket_body(SIGMA - chars)}]"
        if len(negative) < len(positive):
            return negative
    return positive


def _quantifier(low: int, high: int | float) -> str:
    if high == float("inf"):
        if low == 0:
            return "*"
        if low == 1:
            return "+"
        return f"{{{low},}}"
    if (low, high) == (0, 1):
        return "?"
    if low == high:
        return f"{{{low}}}"
    return f"{{{low},{high}}}"


def _emit(node: RegexAst, context: _Context) -> str:
    if isinstance(node, Empty):
        return "()" if context == _Context.REPEAT else ""
    if isinstance(node, Literal):
        text = "".join(escape_char(char) for char in node.text)
        if context == _Context.REPEAT and len(node.text) > 1:
            return f"({text})"
        return text
    if isinstance(node, CharClass):
        return serialize_class(node.chars)
    if isinstance(node, Concat):
        text = "".join(_emit(child, _Context.CONCAT) for child in node.children)
        return f"({text})" if context == _Context.REPEAT else text
    if isinstance(node, Union):
        text = "|".join(_emit(child, _Context.UNION) for child in node.children)
        return f"({text})" if context in (_Context.CONCAT, _Context.REPEAT) else text
    if isinstance(node, Repetition):
        text = _emit(node.child, _Context.REPEAT) + _quantifier(node.min, node.max)
        return f"({text})" if context == _Context.REPEAT else text
    raise TypeError(f"Unknown node type {type(node).__name__}")


def serialize(ast: RegexAst) -> str:
    """
    Prints a syntax tree as a pattern string, adding parentheses only where
    precedence requires them (Repetition > Concat > Union).

    :param ast: the tree
    :return: the pattern string
    """
    return _emit(ast, _Context.TOP)
