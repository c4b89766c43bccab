from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable

import numpy as np

from ..canon.anonymize import abstract_literals
from ..canon.optimizer import canonicalize
from ..regex.nodes import RegexAst
from ..regex.serializer import serialize
from ..regex.stats import ast_stats
from .harness import depth_bucket


@dataclass
class CorpusStats:
    """
    Structural complexity of a corpus. The means are taken over unique
    literal-abstracted structures; the histograms count every instance.
    """

    instances: int = 0
    unique_structures: int = 0
    mean_depth: float | None = None
    mean_nodes: float | None = None
    mean_unions: float | None = None
    top_level: dict[str, int] = field(default_factory=dict)
    depths: dict[str, int] = field(default_factory=dict)

    def as_dict(self) -> dict:
        return {
            "instances": self.instances,
            "unique_structures": self.unique_structures,
            "mean_depth": self.mean_depth,
            "mean_nodes": self.mean_nodes,
            "mean_unions": self.mean_unions,
            "top_level": self.top_level,
            "depths": self.depths,
        }


def corpus_stats(asts: Iterable[RegexAst], canonicalize_first: bool = False) -> CorpusStats:
    """
    Measures a corpus of ground truths after collapsing every literal to
    one placeholder.

    :param asts: the ground truths, canonical unless canonicalize_first is set
    :param canonicalize_first: canonicalize each tree before measuring it
    :return: the statistics
    """
    structures = []
    for ast in asts:
        if canonicalize_first:
            ast = canonicalize(ast)
        structures.append(abstract_literals(ast))
    if not structures:
        return CorpusStats()
    measured = [ast_stats(ast) for ast in structures]
    unique = {serialize(ast): stats for ast, stats in zip(structures, measured)}
    return CorpusStats(
        instances=len(structures),
        unique_structures=len(unique),
        mean_depth=float(np.mean([stats.depth for stats in unique.values()])),
        mean_nodes=float(np.mean([stats.node_count for stats in unique.values()])),
        mean_unions=float(np.mean([stats.union_count for stats in unique.values()])),
        top_level=dict(Counter(str(stats.top_level_operator) for stats in measured)),
        depths=dict(sorted(Counter(depth_bucket(stats.depth) for stats in measured).items())),
    )
