from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass, field

from ..config import CanonConfig
from ..errors import NonTerminationError
from ..regex.nodes import Concat, RegexAst, Repetition, Union
from ..regex.parser import parse
from ..regex.serializer import serialize
from .rules import CanonMode, RewriteContext, RewriteRule, rules_for

logger = logging.getLogger(__name__)


@dataclass
class CanonicalizationTrace:
    """
    A record of the rewrites performed by one canonicalization.

    :param applications: how often each rule fired, by rule id
    """

    applications: Counter = field(default_factory=Counter)

    @property
    def total(self) -> int:
        return sum(self.applications.values())


class _Rewriter:
    """
    Applies rules innermost first: a node's children reach their fixed point
    before the rules are tried, in table order, on the node itself. When a
    rule fires the replacement is canonicalized in turn. Results are
    memoized per node and position, since a concatenation item may settle
    differently from the same node elsewhere.
    """

    def __init__(self, rules: tuple[RewriteRule, ...], config: CanonConfig, trace: CanonicalizationTrace):
        self.rules = rules
        self.config = config
        self.trace = trace
        self.memo: dict[tuple[RegexAst, bool], RegexAst] = {}

    def run(self, node: RegexAst, in_concat: bool = False) -> RegexAst:
        if (node, in_concat) in self.memo:
            return self.memo[node, in_concat]
        context = RewriteContext(self.config.repetition_cap, in_concat)
        current = self._rebuild(node)
        while True:
            for rule in self.rules:
                replacement = rule.apply(current, context)
                if replacement is not None and replacement != current:
                    self._count(rule, current, replacement)
                    current = self._rebuild(replacement)
                    break
            else:
                break
        self.memo[node, in_concat] = current
        self.memo[current, in_concat] = current
        return current

    def _rebuild(self, node: RegexAst) -> RegexAst:
        if isinstance(node, Repetition):
            return Repetition(self.run(node.child), node.min, node.max)
        if isinstance(node, Concat):
            return Concat(tuple(self.run(child, in_concat=True) for child in node.children))
        if isinstance(node, Union):
            return Union(tuple(self.run(child) for child in node.children))
        return node

    def _count(self, rule: RewriteRule, before: RegexAst, after: RegexAst) -> None:
        self.trace.applications[rule.id] += 1
        if self.trace.total > self.config.rule_budget:
            raise NonTerminationError(
                f"Rewriting exceeded {self.config.rule_budget} rule applications (last rule {rule.id})"
            )
        logger.debug(f"{rule.id}: {serialize(before)!r} -> {serialize(after)!r}")


def trace_canonicalize(
        ast: RegexAst,
        mode: CanonMode = CanonMode.PRESERVING,
        config: CanonConfig | None = None) -> tuple[RegexAst, CanonicalizationTrace]:
    """
    Canonicalizes a tree and reports which rules fired.

    :param ast: the tree
    :param mode: the rule set to use
    :param config: the rewrite budget and repetition cap
    :return: the canonical tree and the rule trace
    :raises NonTerminationError: if the rule budget runs out
    """
    trace = CanonicalizationTrace()
    rewriter = _Rewriter(rules_for(mode), config or CanonConfig(), trace)
    return rewriter.run(ast), trace


def canonicalize(ast: RegexAst, mode: CanonMode = CanonMode.PRESERVING, config: CanonConfig | None = None) -> RegexAst:
    """
    Rewrites a tree to its canonical form: flat operators, merged literals,
    sorted and deduplicated unions, factored prefixes. The result is a fixed
    point of the enabled rules. In preserving mode the language is unchanged;
    full mode also caps finite repetition bounds.

    :param ast: the tree
    :param mode: the rule set to use
    :param config: the rewrite budget and repetition cap
    :return: the canonical tree
    :raises NonTerminationError: if the rule budget runs out
    """
    return trace_canonicalize(ast, mode, config)[0]


def canonicalize_pattern(pattern: str, mode: CanonMode = CanonMode.PRESERVING, config: CanonConfig | None = None) -> str:
    """
    Parses, canonicalizes and prints a pattern. Full mode also drops anchors.

    :param pattern: the pattern string
    :param mode: the rule set to use
    :param config: the rewrite budget and repetition cap
    :return: the canonical pattern string
    """
    ast = parse(pattern, strip_anchors=mode == CanonMode.FULL)
    return serialize(canonicalize(ast, mode, config))
