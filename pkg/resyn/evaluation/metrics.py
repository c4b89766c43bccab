from __future__ import annotations

import math
from dataclasses import dataclass

from ..exampleset import ExampleSet
from ..regex.matcher import matches
from ..regex.nodes import Empty, Literal, RegexAst, union_of
from ..regex.serializer import serialize


@dataclass(frozen=True)
class ConfusionCounts:
    """
    How a regex classifies a held-out example set.

    :param tp: positives accepted
    :param tn: negatives rejected
    :param fp: negatives accepted
    :param fn: positives rejected
    """

    tp: int = 0
    tn: int = 0
    fp: int = 0
    fn: int = 0

    @staticmethod
    def of(regex: RegexAst, examples: ExampleSet) -> ConfusionCounts:
        """
        Classifies every example of a set.

        :param regex: the regex under test
        :param examples: the labelled strings
        :return: the counts
        """
        accepted = sum(matches(regex, text) for text in examples.positives)
        rejected = sum(not matches(regex, text) for text in examples.negatives)
        return ConfusionCounts(
            tp=accepted,
            tn=rejected,
            fp=len(examples.negatives) - rejected,
            fn=len(examples.positives) - accepted,
        )

    @property
    def total(self) -> int:
        return self.tp + self.tn + self.fp + self.fn


def mcc(counts: ConfusionCounts) -> float:
    """
    Computes the Matthews correlation coefficient. When any factor of the
    denominator is zero the coefficient is defined as 0.

    :param counts: the confusion counts
    :return: a value in [-1, 1]
    """
    denominator = (
        (counts.tp + counts.fp) * (counts.tp + counts.fn) * (counts.tn + counts.fp) * (counts.tn + counts.fn)
    )
    if denominator == 0:
        return 0.0
    return (counts.tp * counts.tn - counts.fp * counts.fn) / math.sqrt(denominator)


def conciseness(pred: RegexAst, gt: RegexAst) -> float:
    """
    The ratio of serialized lengths, prediction over ground truth. An empty
    ground-truth pattern counts as length 1.
    """
    return len(serialize(pred)) / max(1, len(serialize(gt)))


def failure_substitute(positives: tuple[str, ...]) -> RegexAst:
    """
    The regex scored in place of a failed synthesis: the plain alternation
    of the escaped positives, left uncanonicalized so its length penalizes
    the failure.

    :param positives: the training positives
    :return: the union of their literals
    """
    return union_of([Literal(text) if text else Empty() for text in positives])
