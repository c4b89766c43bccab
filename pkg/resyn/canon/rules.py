from __future__ import annotations

from dataclasses import dataclass
from enum import Enum, auto
from typing import Callable

from ..regex.nodes import (
    CharClass, Concat, Empty, Literal, RegexAst, Repetition, Union, concat_of, union_of
)
from ..regex.serializer import serialize


class CanonMode(Enum):
    """
    Which rules canonicalization may apply.

    :member PRESERVING: language-preserving rules only.
    :member FULL: every rule, including the normalizing ones.
    """

    PRESERVING = auto(), "preserving"
    FULL = auto(), "full"

    def __new__(cls, *args, **kwargs):
        obj = object.__new__(cls)
        obj._value_ = args[0]
        return obj

    def __init__(self, _: int, label: str = ""):
        self._label = label

    def __str__(self):
        return self._label


class RuleKind(Enum):
    PRESERVING = auto()
    NORMALIZING = auto()


class RuleStage(Enum):
    """
    Where a rule takes effect: as an AST rewrite, or while a pattern is read.
    """

    REWRITE = auto()
    PARSE = auto()


@dataclass(frozen=True)
class RewriteContext:
    """
    Where the node being rewritten sits.

    :param repetition_cap: the largest finite repetition bound full mode keeps
    :param in_concat: the node is an item of a concatenation
    """

    repetition_cap: int = 10
    in_concat: bool = False


@dataclass(frozen=True)
class RewriteRule:
    """
    One entry of the rule table. Rewrite-stage rules carry a function that
    takes a node whose children are already canonical and returns its
    replacement, or None when the rule does not apply.

    :param id: the rule name
    :param kind: whether the rule preserves the language
    :param stage: where the rule is realized
    :param summary: a one-line description with an example
    :param apply: the rewrite function (parse-stage rules have none)
    """

    id: str
    kind: RuleKind
    stage: RuleStage
    summary: str
    apply: Callable[[RegexAst, RewriteContext], RegexAst | None] | None = None

    def enabled(self, mode: CanonMode) -> bool:
        if self.stage != RuleStage.REWRITE:
            return False
        return mode == CanonMode.FULL or self.kind == RuleKind.PRESERVING


def _single_char(node: RegexAst) -> frozenset[str] | None:
    if isinstance(node, Literal) and len(node.text) == 1:
        return frozenset(node.text)
    if isinstance(node, CharClass):
        return node.chars
    return None


def singleton_class(node: RegexAst, _: RewriteContext) -> RegexAst | None:
    """
    [a] -> a
    """
    if isinstance(node, CharClass) and len(node.chars) == 1:
        return Literal(next(iter(node.chars)))
    return None


def alt_to_class(node: RegexAst, context: RewriteContext) -> RegexAst | None:
    """
    a|b -> [ab]; every single-character branch joins one class, placed
    where the first of them stood. A union that is an item of a
    concatenation keeps its branches, so az|ab settles on a(b|z).
    """
    if not isinstance(node, Union) or context.in_concat:
        return None
    positions = [index for index, child in enumerate(node.children) if _single_char(child) is not None]
    if len(positions) < 2:
        return None
    merged = CharClass(frozenset().union(*(_single_char(node.children[index]) for index in positions)))
    rest = []
    for index, child in enumerate(node.children):
        if index == positions[0]:
            rest.append(merged)
        elif index not in positions:
            rest.append(child)
    return union_of(rest)


def empty_repetition(node: RegexAst, _: RewriteContext) -> RegexAst | None:
    """
    a{0} -> epsilon, ()* -> epsilon
    """
    if isinstance(node, Repetition) and (node.max == 0 or isinstance(node.child, Empty)):
        return Empty()
    return None


def identity_repetition(node: RegexAst, _: RewriteContext) -> RegexAst | None:
    """
    a{1,1} -> a
    """
    if isinstance(node, Repetition) and node.min == 1 and node.max == 1:
        return node.child
    return None


def fixed_unroll(node: RegexAst, _: RewriteContext) -> RegexAst | None:
    """
    (ab){2} -> abab
    """
    if isinstance(node, Repetition) and isinstance(node.child, Literal) and node.min == node.max >= 2:
        return Literal(node.child.text * node.min)
    return None


def flatten_operators(node: RegexAst, _: RewriteContext) -> RegexAst | None:
    """
    a(bc) -> abc, a|(b|c) -> a|b|c
    """
    if not isinstance(node, (Concat, Union)):
        return None
    kind = type(node)
    if not any(isinstance(child, kind) for child in node.children):
        return None
    children = []
    for child in node.children:
        children.extend(child.children if isinstance(child, kind) else (child,))
    return kind(tuple(children))


def _items(node: RegexAst) -> list[RegexAst]:
    """
    Splits a branch into concatenation items, literals one character at a time.
    """
    parts = node.children if isinstance(node, Concat) else (node,)
    items: list[RegexAst] = []
    for part in parts:
        if isinstance(part, Literal):
            items.extend(Literal(char) for char in part.text)
        else:
            items.append(part)
    return items


def factor_prefix(node: RegexAst, _: RewriteContext) -> RegexAst | None:
    """
    az|ab -> a(z|b); only a prefix shared by every branch is factored.
    """
    if not isinstance(node, Union):
        return None
    branches = [_items(child) for child in node.children]
    if any(not items for items in branches):
        return None
    shared = 0
    while all(len(items) > shared for items in branches) and \
            all(items[shared] == branches[0][shared] for items in branches):
        shared += 1
    if shared == 0:
        return None
    prefix = branches[0][:shared]
    remainders = [concat_of(items[shared:]) for items in branches]
    return concat_of(prefix + [union_of(remainders)])


def handle_empty(node: RegexAst, _: RewriteContext) -> RegexAst | None:
    """
    a()b -> ab, (|a|b) -> (a|b)?
    """
    if isinstance(node, Concat) and any(isinstance(child, Empty) for child in node.children):
        return concat_of([child for child in node.children if not isinstance(child, Empty)])
    if isinstance(node, Union) and any(isinstance(child, Empty) for child in node.children):
        rest = [child for child in node.children if not isinstance(child, Empty)]
        if not rest:
            return Empty()
        return Repetition(union_of(rest), 0, 1)
    return None


def merge_literals(node: RegexAst, _: RewriteContext) -> RegexAst | None:
    """
    Concat[a, b] -> ab
    """
    if not isinstance(node, Concat):
        return None
    children: list[RegexAst] = []
    for child in node.children:
        if isinstance(child, Literal) and children and isinstance(children[-1], Literal):
            children[-1] = Literal(children[-1].text + child.text)
        else:
            children.append(child)
    if len(children) == len(node.children):
        return None
    return concat_of(children)


def sort_union(node: RegexAst, _: RewriteContext) -> RegexAst | None:
    """
    b|a(c) -> a(c)|b; duplicate branches collapse.
    """
    if not isinstance(node, Union):
        return None
    keyed = {serialize(child): child for child in node.children}
    ordered = tuple(keyed[key] for key in sorted(keyed))
    if ordered == node.children:
        return None
    return union_of(list(ordered))


def clip_quantifier(node: RegexAst, context: RewriteContext) -> RegexAst | None:
    """
    a{2,30} -> a{2,10}; unbounded repetitions keep their infinity.
    """
    cap = context.repetition_cap
    if not isinstance(node, Repetition) or node.is_unbounded() or node.max <= cap:
        return None
    return Repetition(node.child, min(node.min, cap), cap)


RULES: tuple[RewriteRule, ...] = (
    RewriteRule("SingletonClass", RuleKind.PRESERVING, RuleStage.REWRITE, "[a] -> a", singleton_class),
    RewriteRule("AltToClass", RuleKind.PRESERVING, RuleStage.REWRITE, "a|b -> [ab]", alt_to_class),
    RewriteRule("EmptyRep", RuleKind.PRESERVING, RuleStage.REWRITE, "a{0} -> ()", empty_repetition),
    RewriteRule("IdentityRep", RuleKind.PRESERVING, RuleStage.REWRITE, "a{1,1} -> a", identity_repetition),
    RewriteRule("FixedUnroll", RuleKind.PRESERVING, RuleStage.REWRITE, "a{3} -> aaa", fixed_unroll),
    RewriteRule("OpFlattening", RuleKind.PRESERVING, RuleStage.REWRITE, "a(bc) -> abc", flatten_operators),
    RewriteRule("PrefixFactor", RuleKind.PRESERVING, RuleStage.REWRITE, "az|ab -> a(z|b)", factor_prefix),
    RewriteRule("EmptyHandling", RuleKind.PRESERVING, RuleStage.REWRITE, "(|a) -> a?", handle_empty),
    RewriteRule("LiteralMerge", RuleKind.PRESERVING, RuleStage.REWRITE, "a b -> ab", merge_literals),
    RewriteRule("UnionSort", RuleKind.PRESERVING, RuleStage.REWRITE, "b|a -> a|b", sort_union),
    RewriteRule("QuantifierClip", RuleKind.NORMALIZING, RuleStage.REWRITE, "a{2,30} -> a{2,10}", clip_quantifier),
    RewriteRule("ClassNegation", RuleKind.NORMALIZING, RuleStage.PARSE, "[^a] -> complement over the alphabet"),
    RewriteRule("AssertionRemoval", RuleKind.NORMALIZING, RuleStage.PARSE, "^a$ -> a"),
    RewriteRule("QuantUnify", RuleKind.PRESERVING, RuleStage.PARSE, "a*? -> a*"),
    RewriteRule("EngineMode", RuleKind.NORMALIZING, RuleStage.PARSE, ". -> every alphabet symbol, ASCII classes"),
)


def rules_for(mode: CanonMode) -> tuple[RewriteRule, ...]:
    """
    Selects the rewrite rules a mode enables, in table order.

    :param mode: the canonicalization mode
    :return: the enabled rules
    """
    return tuple(rule for rule in RULES if rule.enabled(mode))


def rule_by_id(rule_id: str) -> RewriteRule:
    for rule in RULES:
        if rule.id == rule_id:
            return rule
    raise KeyError(rule_id)
