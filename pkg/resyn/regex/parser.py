from __future__ import annotations

import logging
import re

from ..errors import ParseError, UnsupportedFeature
from .alphabet import DIGITS, SIGMA, SPACE, WORD, is_token
from .nodes import INFINITY, CharClass, Literal, RegexAst, Repetition, concat_of, union_of
from .serializer import escape_char

logger = logging.getLogger(__name__)

_QUANTIFIER = re.compile(r"\{(\d*)(,(\d*))?\}")
_CLASS_ESCAPES = {
    "d": DIGITS,
    "w": WORD,
    "s": SPACE,
    "D": SIGMA - DIGITS,
    "W": SIGMA - WORD,
    "S": SIGMA - SPACE,
}
_CHAR_ESCAPES = {"t": "\t", "n": "\n", "r": "\r", "f": "\f"}


class _Anchor:
    """
    Marker returned for a boundary assertion that was stripped.
    """


class Parser:
    """
    A recursive-descent reader for the regular fragment of the usual regex
    syntax. Unions bind loosest, then concatenation, then quantifiers.

    :param pattern: the pattern string
    :param strip_anchors: read ^, $, \\A and \\Z as epsilon instead of rejecting them
    :param allow_tokens: accept \\xHH escapes naming anonymization tokens
    """

    def __init__(self, pattern: str, strip_anchors: bool = False, allow_tokens: bool = False):
        self.pattern = pattern
        self.pos = 0
        self.strip_anchors = strip_anchors
        self.allow_tokens = allow_tokens

    def parse(self) -> RegexAst:
        """
        Reads the whole pattern.

        :return: the syntax tree
        """
        ast = self._union()
        if self.pos < len(self.pattern):
            # only an unmatched ")" can stop the union early
            raise ParseError(self.pos, "unbalanced parenthesis")
        return ast

    def _peek(self, offset: int = 0) -> str | None:
        index = self.pos + offset
        if index < len(self.pattern):
            return self.pattern[index]
        return None

    def _at_end(self) -> bool:
        return self.pos >= len(self.pattern)

    def _union(self) -> RegexAst:
        branches = [self._concat()]
        while self._peek() == "|":
            self.pos += 1
            branches.append(self._concat())
        return union_of(branches)

    def _concat(self) -> RegexAst:
        items: list[RegexAst] = []
        while not self._at_end() and self._peek() not in "|)":
            item = self._repeat()
            if item is None:
                continue
            if isinstance(item, Literal) and items and isinstance(items[-1], Literal):
                items[-1] = Literal(items[-1].text + item.text)
            else:
                items.append(item)
        return concat_of(items)

    def _repeat(self) -> RegexAst | None:
        start = self.pos
        atom = self._atom()
        bounds = self._quantifier()
        if bounds is None:
            return None if isinstance(atom, _Anchor) else atom
        if isinstance(atom, _Anchor):
            raise ParseError(start, "nothing to repeat")
        low, high = bounds
        # lazy and possessive forms share the greedy semantics
        if self._peek() in ("?", "+"):
            self.pos += 1
        if self._peek() in ("*", "+", "?") or self._quantifier_ahead():
            raise ParseError(self.pos, "multiple repeat")
        return Repetition(atom, low, high)

    def _quantifier_ahead(self) -> bool:
        if self._peek() != "{":
            return False
        match = _QUANTIFIER.match(self.pattern, self.pos)
        return bool(match) and bool(match.group(1) or match.group(3))

    def _quantifier(self) -> tuple[int, int | float] | None:
        char = self._peek()
        if char == "*":
            self.pos += 1
            return 0, INFINITY
        if char == "+":
            self.pos += 1
            return 1, INFINITY
        if char == "?":
            self.pos += 1
            return 0, 1
        if char == "{" and self._quantifier_ahead():
            match = _QUANTIFIER.match(self.pattern, self.pos)
            low_text, comma, high_text = match.group(1), match.group(2), match.group(3)
            low = int(low_text) if low_text else 0
            if comma is None:
                high = low
            else:
                high = int(high_text) if high_text else INFINITY
            if high < low:
                raise ParseError(self.pos, "min repeat greater than max repeat")
            self.pos = match.end()
            return low, high
        return None

    def _atom(self) -> RegexAst | _Anchor:
        start = self.pos
        char = self.pattern[self.pos]
        if char in "*+?":
            raise ParseError(start, "nothing to repeat")
        if char == "{" and self._quantifier_ahead():
            raise ParseError(start, "nothing to repeat")
        if char == "(":
            return self._group()
        if char == "[":
            return self._char_class()
        if char == ".":
            self.pos += 1
            return CharClass(SIGMA)
        if char in "^$":
            self.pos += 1
            return self._anchor(start)
        if char == "\\":
            return self._escape()
        self.pos += 1
        return Literal(self._checked(char, start))

    def _anchor(self, start: int) -> _Anchor:
        if not self.strip_anchors:
            raise UnsupportedFeature("anchor", start)
        return _Anchor()

    def _checked(self, char: str, position: int) -> str:
        if char not in SIGMA:
            raise UnsupportedFeature("non-printable character", position)
        return char

    def _group(self) -> RegexAst:
        start = self.pos
        self.pos += 1
        if self._peek() == "?":
            self._group_extension(start)
        inner = self._union()
        if self._peek() != ")":
            raise ParseError(start, "missing ), unterminated subpattern")
        self.pos += 1
        return inner

    def _group_extension(self, start: int) -> None:
        rest = self.pattern[self.pos:]
        if rest.startswith("?:"):
            self.pos += 2
        elif rest.startswith(("?=", "?!", "?<=", "?<!")):
            raise UnsupportedFeature("lookaround", start)
        elif rest.startswith("?P="):
            raise UnsupportedFeature("backreference", start)
        elif rest.startswith("?P<"):
            close = self.pattern.find(">", self.pos)
            if close == -1:
                raise ParseError(start, "missing >, unterminated name")
            self.pos = close + 1
        else:
            raise UnsupportedFeature("group extension", start)

    def _escape(self) -> RegexAst | _Anchor:
        start = self.pos
        if self.pos + 1 >= len(self.pattern):
            raise ParseError(start, "bad escape (end of pattern)")
        code = self.pattern[self.pos + 1]
        self.pos += 2
        if code in _CLASS_ESCAPES:
            return CharClass(_CLASS_ESCAPES[code])
        if code in ("A", "Z"):
            return self._anchor(start)
        if code in ("b", "B"):
            raise UnsupportedFeature("word boundary", start)
        if code in "123456789":
            raise UnsupportedFeature("backreference", start)
        return Literal(self._escaped_char(code, start))

    def _escaped_char(self, code: str, start: int) -> str:
        """
        Resolves an escape that denotes a single character.

        :param code: the character following the backslash
        :param start: the position of the backslash
        :return: the denoted character
        """
        if code in _CHAR_ESCAPES:
            return _CHAR_ESCAPES[code]
        if code == "x":
            digits = self.pattern[self.pos:self.pos + 2]
            if len(digits) != 2 or any(d not in "0123456789abcdefABCDEF" for d in digits):
                raise ParseError(start, "incomplete escape \\x")
            self.pos += 2
            char = chr(int(digits, 16))
            if self.allow_tokens and is_token(char):
                return char
            return self._checked(char, start)
        if code in ("u", "U", "N"):
            raise UnsupportedFeature("unicode escape", start)
        if code == "0":
            raise UnsupportedFeature("octal escape", start)
        if code.isascii() and code.isalpha():
            if code in ("v", "a"):
                raise UnsupportedFeature("non-printable character", start)
            raise ParseError(start, f"bad escape \\{code}")
        return self._checked(code, start)

    def _char_class(self) -> CharClass:
        start = self.pos
        self.pos += 1
        negate = False
        if self._peek() == "^":
            negate = True
            self.pos += 1
        chars: set[str] = set()
        first = True
        while True:
            if self._at_end():
                raise ParseError(start, "unterminated character set")
            if self._peek() == "]" and not first:
                self.pos += 1
                break
            first = False
            item_start = self.pos
            low = self._class_item()
            if isinstance(low, str) and self._peek() == "-" and self._peek(1) not in (None, "]"):
                self.pos += 1
                high = self._class_item()
                if not isinstance(high, str) or ord(high) < ord(low):
                    raise ParseError(item_start, "bad character range")
                chars.update(chr(code) for code in range(ord(low), ord(high) + 1))
            elif isinstance(low, str):
                chars.add(low)
            else:
                chars.update(low)
        if negate:
            chars = set(SIGMA - chars)
        if not chars:
            raise UnsupportedFeature("empty character class", start)
        return CharClass(frozenset(chars))

    def _class_item(self) -> str | frozenset[str]:
        start = self.pos
        char = self.pattern[self.pos]
        if char != "\\":
            self.pos += 1
            return self._checked(char, start)
        if self.pos + 1 >= len(self.pattern):
            raise ParseError(start, "bad escape (end of pattern)")
        code = self.pattern[self.pos + 1]
        self.pos += 2
        if code in _CLASS_ESCAPES:
            return _CLASS_ESCAPES[code]
        if code == "b":
            raise UnsupportedFeature("non-printable character", start)
        if code.isdigit():
            raise UnsupportedFeature("octal escape", start)
        return self._escaped_char(code, start)


def parse(pattern: str, strip_anchors: bool = False, allow_tokens: bool = False) -> RegexAst:
    """
    Parses a pattern string into a syntax tree. The empty pattern is epsilon.

    :param pattern: the pattern string
    :param strip_anchors: treat boundary anchors as epsilon (full-match reading)
    :param allow_tokens: accept \\xHH escapes for anonymization tokens
    :return: the syntax tree
    :raises ParseError: on malformed syntax
    :raises UnsupportedFeature: on lookaround, backreferences or characters outside the alphabet
    """
    ast = Parser(pattern, strip_anchors, allow_tokens).parse()
    logger.debug(f"Parsed {pattern!r} into {ast}")
    return ast


def escape_literal(text: str) -> str:
    """
    Escapes a string so that the resulting pattern matches exactly that string.

    :param text: the string to escape
    :return: the pattern
    """
    return "".join(escape_char(char) for char in text)
