from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable


@dataclass(frozen=True)
class ExampleSet:
    """
    Positive and negative example strings. Both keep their first-seen order
    and hold no duplicates; no string may be both positive and negative.

    :param positives: strings the regex must accept
    :param negatives: strings the regex must reject
    """

    positives: tuple[str, ...] = ()
    negatives: tuple[str, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "positives", tuple(dict.fromkeys(self.positives)))
        object.__setattr__(self, "negatives", tuple(dict.fromkeys(self.negatives)))
        overlap = set(self.positives) & set(self.negatives)
        if overlap:
            raise ValueError(f"Strings are both positive and negative: {sorted(overlap)}")

    @staticmethod
    def of(positives: Iterable[str], negatives: Iterable[str] = ()) -> ExampleSet:
        return ExampleSet(tuple(positives), tuple(negatives))

    def without_negatives(self) -> ExampleSet:
        return ExampleSet(self.positives)

    def strings(self) -> tuple[str, ...]:
        return self.positives + self.negatives

    def __len__(self) -> int:
        return len(self.positives) + len(self.negatives)
