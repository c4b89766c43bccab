from __future__ import annotations

import logging
import random
import time

from ..config import GenerationConfig
from ..errors import InsufficientLanguage, SamplingTimeout
from ..regex.nodes import CharClass, Concat, Empty, Literal, RegexAst, Repetition, Union, walk
from ..regex.serializer import serialize

logger = logging.getLogger(__name__)


def _path_to(root: RegexAst, target: RegexAst) -> list[RegexAst] | None:
    """
    Finds the chain of nodes from root down to target, compared by identity.
    """
    if root is target:
        return [root]
    for child in root.children_of():
        path = _path_to(child, target)
        if path is not None:
            return [root] + path
    return None


class _Generator:
    """
    Draws one random member of a language. Branches are chosen uniformly,
    repetition counts uniformly over [min, min(max, max_repeat)] and class
    characters uniformly. A forced route makes every node on it be visited
    and picks a chosen branch at the routed union.

    :param rng: the random source
    :param max_repeat: the largest repetition count drawn for open bounds
    """

    def __init__(self, rng: random.Random, max_repeat: int):
        self.rng = rng
        self.max_repeat = max_repeat
        self.route: set[int] = set()
        self.forced: dict[int, int] = {}

    def draw(self, node: RegexAst) -> str:
        if isinstance(node, Empty):
            return ""
        if isinstance(node, Literal):
            return node.text
        if isinstance(node, CharClass):
            return self.rng.choice(sorted(node.chars))
        if isinstance(node, Concat):
            return "".join(self.draw(child) for child in node.children)
        if isinstance(node, Union):
            if id(node) in self.forced:
                return self.draw(node.children[self.forced[id(node)]])
            for child in node.children:
                if id(child) in self.route:
                    return self.draw(child)
            return self.draw(self.rng.choice(node.children))
        if isinstance(node, Repetition):
            high = node.min if node.min > self.max_repeat else min(node.max, self.max_repeat)
            low = node.min
            if id(node.child) in self.route:
                low = max(low, 1)
                high = max(high, low)
            count = self.rng.randint(low, int(high))
            return "".join(self.draw(node.child) for _ in range(count))
        raise TypeError(f"Unknown node type {type(node).__name__}")


class _Sampler:
    """
    Collects distinct members of a language until enough are found, a draw
    keeps repeating old strings, or the clock runs out.
    """

    def __init__(self, ast: RegexAst, seed, config: GenerationConfig):
        self.ast = ast
        self.config = config
        self.generator = _Generator(random.Random(seed), config.max_repeat)
        self.deadline = time.monotonic() + config.timeout
        self.found: dict[str, None] = {}

    def _fresh(self) -> bool:
        """
        Tries up to the retry budget to add one new string.

        :return: True if a new string was added
        """
        for _ in range(self.config.retries):
            if time.monotonic() > self.deadline:
                raise SamplingTimeout(f"Sampling {serialize(self.ast)!r} ran past {self.config.timeout} s")
            text = self.generator.draw(self.ast)
            if text not in self.found:
                self.found[text] = None
                return True
        return False

    def cover_branches(self, k: int) -> None:
        for union in (node for node in walk(self.ast) if isinstance(node, Union)):
            path = _path_to(self.ast, union)
            self.generator.route = {id(node) for node in path}
            for index in range(len(union.children)):
                if len(self.found) >= k:
                    break
                self.generator.forced = {id(union): index}
                self._fresh()
        self.generator.route = set()
        self.generator.forced = {}

    def fill(self, k: int) -> None:
        while len(self.found) < k and self._fresh():
            pass


def sample_positives(ast: RegexAst, k: int, seed=None, config: GenerationConfig | None = None) -> tuple[str, ...]:
    """
    Samples distinct members of a language. Every branch of every union is
    forced once first (outermost unions first) while k permits, then draws
    are uniform until k strings are found or a draw exhausts its retries.

    :param ast: a canonical tree
    :param k: how many strings to return at most
    :param seed: the seed for the draws
    :param config: the repetition cap, retry budget and timeout
    :return: up to k distinct strings, in the order they were found
    :raises InsufficientLanguage: if fewer than two distinct strings turn up
    :raises SamplingTimeout: if the wall-clock budget runs out
    """
    config = config or GenerationConfig()
    sampler = _Sampler(ast, seed, config)
    sampler.cover_branches(k)
    sampler.fill(k)
    if len(sampler.found) < 2:
        raise InsufficientLanguage(f"{serialize(ast)!r} yielded only {len(sampler.found)} distinct strings")
    logger.debug(f"Sampled {len(sampler.found)} positives for {serialize(ast)!r}")
    return tuple(sampler.found)[:k]
