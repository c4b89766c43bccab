from __future__ import annotations

import logging
import time
from dataclasses import dataclass
from enum import Enum, auto
from typing import Iterable

from ..config import SynthesisConfig
from ..errors import ResynError
from ..eventmanager import (
    DecompositionEvent, EventManager, LeafSynthesizedEvent, SynthesisFinishedEvent, SynthesisStartedEvent
)
from ..exampleset import ExampleSet
from ..regex.matcher import consistent
from ..regex.nodes import Empty, Literal, RegexAst
from ..regex.serializer import serialize
from .fallback import fallback_synthesize
from .strategies import RouterAction, StrategySuite
from .tree import ConcatNode, DerivationNode, Leaf, LeafSource, UnionNode, compose

logger = logging.getLogger(__name__)


class FailureReason(Enum):
    """
    Why a synthesis run produced no regex.

    :member NO_CANDIDATE: some sub-problem had no consistent solution.
    :member INCONSISTENT: the composed regex failed the final check against all examples.
    """

    NO_CANDIDATE = auto(), "no candidate"
    INCONSISTENT = auto(), "inconsistent"

    def __new__(cls, *args, **kwargs):
        obj = object.__new__(cls)
        obj._value_ = args[0]
        return obj

    def __init__(self, _: int, label: str = ""):
        self._label = label

    def __str__(self):
        return self._label


@dataclass
class SynthesisResult:
    """
    The outcome of one synthesis run.

    :param regex: the synthesized regex, None on failure
    :param tree: the derivation, kept on failure for diagnostics
    :param failure: why the run failed, None on success
    :param elapsed: wall-clock seconds
    """

    regex: RegexAst | None
    tree: DerivationNode
    failure: FailureReason | None = None
    elapsed: float = 0.0

    @property
    def success(self) -> bool:
        return self.failure is None

    def pattern(self) -> str | None:
        return serialize(self.regex) if self.regex is not None else None


def synthesize_from_singleton(text: str) -> RegexAst:
    """
    The regex matching exactly one string: the escaped literal, or epsilon.
    """
    return Literal(text) if text else Empty()


class Synthesizer:
    """
    Recursive divide-and-conquer synthesis. The router decides, per example
    set, whether to segment, partition or solve it directly; sub-problems
    recurse with no negatives, and the same decomposition is never applied
    twice in a row. A decomposition whose sub-problem fails is abandoned in
    favour of solving the node directly.

    :param suite: the router, partitioner, segmenter and base synthesizer
    :param config: recursion depth, fallback and negative-handling options
    :param event_manager: receives progress events, if given
    """

    def __init__(self, suite: StrategySuite, config: SynthesisConfig | None = None, event_manager: EventManager | None = None):
        self.suite = suite
        self.config = config or SynthesisConfig()
        self.event_manager = event_manager

    def _post(self, event) -> None:
        if self.event_manager is not None:
            self.event_manager.post(event)

    def synthesize(self, positives: Iterable[str], negatives: Iterable[str] = ()) -> SynthesisResult:
        """
        Synthesizes a regex accepting the positives and rejecting the negatives.

        :param positives: at least one string to accept
        :param negatives: strings to reject
        :return: the result with its derivation tree
        """
        examples = ExampleSet(tuple(positives), tuple(negatives))
        if not examples.positives:
            raise ValueError("Synthesis needs at least one positive example")
        self._post(SynthesisStartedEvent(self.suite.name, len(examples.positives), len(examples.negatives)))
        start = time.perf_counter()
        tree = self.recursive_synthesize(examples, None, 0, self.suite.root_hint)
        if tree.failed():
            result = SynthesisResult(None, tree, FailureReason.NO_CANDIDATE)
        else:
            regex = compose(tree)
            if consistent(regex, examples.positives, examples.negatives):
                result = SynthesisResult(regex, tree)
            else:
                logger.info(f"Composed {serialize(regex)!r} is inconsistent with the examples")
                result = SynthesisResult(None, tree, FailureReason.INCONSISTENT)
        result.elapsed = time.perf_counter() - start
        self._post(SynthesisFinishedEvent(result.pattern(), result.elapsed))
        return result

    def recursive_synthesize(
            self,
            examples: ExampleSet,
            prev: RouterAction | None,
            depth: int,
            hint: RegexAst | None = None) -> DerivationNode:
        """
        Solves one node of the derivation.

        :param examples: the local examples
        :param prev: the decomposition that produced this node, None at the root
        :param depth: the distance from the root
        :param hint: the ground-truth sub-regex, when an oracle drives the suite
        :return: the derivation rooted here
        """
        positives = examples.positives
        if len(positives) == 1:
            return self._leaf(Leaf(examples, synthesize_from_singleton(positives[0]), LeafSource.SINGLETON), depth)
        if depth >= self.config.max_recursion_depth:
            return self.synthesize_with_fallback(examples, depth, hint)
        action = self.suite.router(examples, prev, hint)
        logger.debug(f"Router chose {action} for {len(positives)} positives at depth {depth}")
        if action == RouterAction.SEGMENT and prev != RouterAction.SEGMENT:
            node = self._segment(examples, depth, hint)
            if node is not None:
                return node
        if action == RouterAction.PARTITION and prev != RouterAction.PARTITION:
            node = self._partition(examples, depth, hint)
            if node is not None:
                return node
        return self.synthesize_with_fallback(examples, depth, hint)

    def _segment(self, examples: ExampleSet, depth: int, hint: RegexAst | None) -> DerivationNode | None:
        try:
            segmentation = self.suite.segmenter(examples.positives, hint)
        except ResynError as e:
            logger.warning(f"Segmenter failed, solving directly: {e}")
            return None
        if not segmentation.preserves(examples.positives):
            logger.warning("Segmenter returned splits that do not rebuild the strings; ignoring them")
            return None
        if segmentation.k <= 1:
            return None
        columns = segmentation.columns()
        self._post(DecompositionEvent(RouterAction.SEGMENT, depth, tuple(len(column) for column in columns)))
        children = tuple(
            self.recursive_synthesize(ExampleSet(column), RouterAction.SEGMENT, depth + 1, segmentation.hint(index))
            for index, column in enumerate(columns)
        )
        return self._settle(ConcatNode(examples, children), depth, hint)

    def _partition(self, examples: ExampleSet, depth: int, hint: RegexAst | None) -> DerivationNode | None:
        try:
            partition = self.suite.partitioner(examples.positives, hint)
        except ResynError as e:
            logger.warning(f"Partitioner failed, solving directly: {e}")
            return None
        if not partition.is_partition_of(examples.positives):
            logger.warning("Partitioner returned groups that are not a partition; ignoring them")
            return None
        if partition.m <= 1:
            return None
        if partition.all_singletons():
            logger.debug("Partition into singletons rejected")
            return self.synthesize_with_fallback(examples, depth, hint)
        self._post(DecompositionEvent(RouterAction.PARTITION, depth, tuple(len(group) for group in partition.groups)))
        negatives = examples.negatives if self.config.strict_negatives else ()
        children = tuple(
            self.recursive_synthesize(ExampleSet(group, negatives), RouterAction.PARTITION, depth + 1, partition.hint(index))
            for index, group in enumerate(partition.groups)
        )
        return self._settle(UnionNode(examples, children), depth, hint)

    def _settle(self, node: DerivationNode, depth: int, hint: RegexAst | None) -> DerivationNode:
        if not node.failed():
            return node
        logger.debug(f"Abandoning a decomposition at depth {depth}: a sub-problem failed")
        leaf = self.synthesize_with_fallback(node.examples, depth, hint)
        leaf.abandoned = node
        return leaf

    def synthesize_with_fallback(self, examples: ExampleSet, depth: int = 0, hint: RegexAst | None = None) -> Leaf:
        """
        Solves an example set directly: the base synthesizer first, then
        the fallback ladder.

        :param examples: the local examples
        :param depth: the distance from the root, for events
        :param hint: the ground-truth sub-regex, when an oracle drives the suite
        :return: the leaf, marked failed when nothing fits
        """
        regex = self.suite.base(examples, hint)
        if regex is not None and consistent(regex, examples.positives, examples.negatives):
            return self._leaf(Leaf(examples, regex, LeafSource.BASE), depth)
        if self.config.fallback_enabled:
            regex = fallback_synthesize(examples)
            if regex is not None:
                return self._leaf(Leaf(examples, regex, LeafSource.FALLBACK), depth)
        return self._leaf(Leaf(examples, None, LeafSource.FAILED), depth)

    def _leaf(self, leaf: Leaf, depth: int) -> Leaf:
        pattern = serialize(leaf.regex) if leaf.regex is not None else None
        self._post(LeafSynthesizedEvent(leaf.source, pattern, depth))
        return leaf


def synthesize(
        positives: Iterable[str],
        negatives: Iterable[str],
        suite: StrategySuite,
        config: SynthesisConfig | None = None,
        event_manager: EventManager | None = None) -> SynthesisResult:
    """
    Runs the recursive synthesizer once.

    :param positives: strings to accept
    :param negatives: strings to reject
    :param suite: the strategies to use
    :param config: synthesis options
    :param event_manager: receives progress events, if given
    :return: the result; its regex is consistent with every example whenever it is set
    """
    return Synthesizer(suite, config, event_manager).synthesize(positives, negatives)


def recursive_synthesize(
        positives: Iterable[str],
        negatives: Iterable[str],
        prev: RouterAction | None,
        depth: int,
        suite: StrategySuite,
        config: SynthesisConfig | None = None,
        hint: RegexAst | None = None) -> DerivationNode:
    """
    Solves one node without the final consistency check.

    :return: the derivation rooted at that node
    """
    synthesizer = Synthesizer(suite, config)
    return synthesizer.recursive_synthesize(ExampleSet(tuple(positives), tuple(negatives)), prev, depth, hint)
