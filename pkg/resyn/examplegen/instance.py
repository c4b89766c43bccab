from __future__ import annotations

import logging
import random
from dataclasses import dataclass

from ..config import GenerationConfig
from ..exampleset import ExampleSet
from ..regex.nodes import RegexAst
from ..regex.serializer import serialize
from .negatives import mutate_negatives
from .sampler import sample_positives

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Instance:
    """
    One benchmark problem: a ground truth with training and held-out examples.
    No string appears in both example sets.

    :param id: the identifier
    :param gt: the ground-truth regex
    :param train: the examples given to the synthesizer
    :param holdout: the examples used to judge generalization
    """

    id: str
    gt: RegexAst
    train: ExampleSet
    holdout: ExampleSet

    def pattern(self) -> str:
        return serialize(self.gt)


def build_instance(gt: RegexAst, config: GenerationConfig | None = None, seed=None, instance_id: str = "0") -> Instance:
    """
    Generates the examples of an instance. The positives for both sets come
    from one sampling run so they never repeat; the training set takes the
    first ones, which cover the union branches. Negatives are hard
    negatives of the positives of the same set.

    :param gt: a canonical ground truth that passes validation
    :param config: how many examples of each kind to draw
    :param seed: the seed, making the instance reproducible
    :param instance_id: the identifier to record
    :return: the instance
    :raises InsufficientLanguage: if gt has fewer than two sampled members
    :raises SamplingTimeout: if sampling runs past its budget
    """
    config = config or GenerationConfig()
    rng = random.Random(seed)
    sample_seed, train_seed, holdout_seed = (rng.getrandbits(32) for _ in range(3))
    sampled = sample_positives(gt, config.positives + config.holdout_positives, sample_seed, config)
    train_positives = sampled[:config.positives]
    holdout_positives = sampled[config.positives:]
    train_negatives = mutate_negatives(gt, train_positives, config.negatives, train_seed, config.retries).strings
    holdout_negatives = ()
    if holdout_positives:
        holdout_negatives = mutate_negatives(
            gt, holdout_positives, config.holdout_negatives, holdout_seed, config.retries, exclude=train_negatives
        ).strings
    else:
        logger.info(f"Instance {instance_id} has no held-out positives")
    return Instance(
        instance_id,
        gt,
        ExampleSet(train_positives, train_negatives),
        ExampleSet(holdout_positives, holdout_negatives),
    )
