from __future__ import annotations

import logging
import re
from dataclasses import dataclass
from enum import Enum, auto

from ..config import CanonConfig
from ..errors import ParseError, UnsupportedFeature
from ..regex.alphabet import in_sigma
from ..regex.nodes import Empty, RegexAst, Union
from ..regex.parser import parse
from ..regex.serializer import serialize
from .optimizer import canonicalize
from .rules import CanonMode

logger = logging.getLogger(__name__)


class Reason(Enum):
    """
    Why a pattern was accepted or rejected.
    """

    OK = auto(), "Ok"
    UNPARSABLE = auto(), "Unparsable"
    LOOKAROUND = auto(), "Lookaround"
    BACKREFERENCE = auto(), "Backreference"
    NON_PRINTABLE = auto(), "NonPrintable"
    TOO_LONG = auto(), "TooLong"
    UNION_TOO_WIDE = auto(), "UnionTooWide"
    EMPTY_AFTER_OPTIMIZE = auto(), "EmptyAfterOptimize"

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


_FEATURE_REASONS = {
    "lookaround": Reason.LOOKAROUND,
    "backreference": Reason.BACKREFERENCE,
    "non-printable character": Reason.NON_PRINTABLE,
    "octal escape": Reason.NON_PRINTABLE,
    "unicode escape": Reason.NON_PRINTABLE,
}


@dataclass(frozen=True)
class ValidationVerdict:
    """
    The outcome of validating one pattern.

    :param reason: Ok for accepted patterns, otherwise the first failed check
    :param canonical: the full-mode canonical tree of an accepted pattern
    """

    reason: Reason
    canonical: RegexAst | None = None

    @property
    def accepted(self) -> bool:
        return self.reason == Reason.OK


def _too_wide(ast: RegexAst, limit: int) -> bool:
    return isinstance(ast, Union) and len(ast.children) > limit


def validate(pattern: str, config: CanonConfig | None = None) -> ValidationVerdict:
    """
    Filters a candidate pattern. The checks run in a fixed order and the
    first failure decides the reason: characters outside the alphabet, the
    supported-fragment parse (lookaround, backreferences), the width of the
    top-level union as written, emptiness after full canonicalization, the
    length of the canonical serialization (not of the input), and the
    canonical union width.

    :param pattern: the candidate pattern
    :param config: the length and width limits
    :return: the verdict, never raising for bad input
    """
    config = config or CanonConfig()
    if not in_sigma(pattern):
        return ValidationVerdict(Reason.NON_PRINTABLE)
    try:
        ast = parse(pattern, strip_anchors=True)
    except UnsupportedFeature as e:
        return ValidationVerdict(_FEATURE_REASONS.get(e.feature, Reason.UNPARSABLE))
    except ParseError:
        return ValidationVerdict(Reason.UNPARSABLE)
    try:
        re.compile(pattern)
    except re.error:
        logger.debug(f"{pattern!r} parsed but does not compile")
        return ValidationVerdict(Reason.UNPARSABLE)
    if _too_wide(ast, config.max_union_branches):
        return ValidationVerdict(Reason.UNION_TOO_WIDE)
    canonical = canonicalize(ast, CanonMode.FULL, config)
    if isinstance(canonical, Empty):
        return ValidationVerdict(Reason.EMPTY_AFTER_OPTIMIZE)
    if len(serialize(canonical)) > config.max_length:
        return ValidationVerdict(Reason.TOO_LONG)
    if _too_wide(canonical, config.max_union_branches):
        return ValidationVerdict(Reason.UNION_TOO_WIDE)
    return ValidationVerdict(Reason.OK, canonical)
