from __future__ import annotations

import logging
import typing
from dataclasses import dataclass, field, fields
from enum import Enum, auto

from .errors import ConfigError

logger = logging.getLogger(__name__)


class ClassCost(Enum):
    """
    How a character class is charged in the expression cost.

    :member UNIT: every class occurrence costs one symbol.
    :member SET_SIZE: a class costs the number of characters it admits.
    """

    UNIT = auto(), "unit"
    SET_SIZE = auto(), "set-size"

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


@dataclass
class SynthesisConfig:
    """
    Knobs for the recursive synthesizer.

    :param max_recursion_depth: the deepest decomposition before leaves are forced
    :param fallback_enabled: try the fallback ladder when the base synthesizer fails
    :param base_budget: the most candidates the enumerative base may build
    :param base_max_cost: the largest expression cost the enumerative base explores
    :param strict_negatives: hand parent negatives down to union branches
    :param class_cost: the cost convention for character classes
    """

    max_recursion_depth: int = 12
    fallback_enabled: bool = True
    base_budget: int = 20000
    base_max_cost: int = 6
    strict_negatives: bool = False
    class_cost: ClassCost = ClassCost.UNIT

    def __post_init__(self):
        if self.max_recursion_depth < 1:
            raise ConfigError(f"max_recursion_depth must be at least 1, got {self.max_recursion_depth}")
        if self.base_budget < 1:
            raise ConfigError(f"base_budget must be positive, got {self.base_budget}")


@dataclass
class GenerationConfig:
    """
    Knobs for example generation.
    """

    positives: int = 10
    negatives: int = 10
    holdout_positives: int = 10
    holdout_negatives: int = 10
    max_repeat: int = 20
    retries: int = 200
    timeout: float = 60.0


@dataclass
class CanonConfig:
    """
    Knobs for canonicalization and validation.
    """

    repetition_cap: int = 10
    rule_budget: int = 10000
    max_length: int = 110
    max_union_branches: int = 10


@dataclass
class OracleConfig:
    """
    Search budgets of the exact cost oracles, counted in explored states.
    """

    alignment_budget: int = 200000
    decomposition_budget: int = 200000
    expression_budget: int = 200000


@dataclass
class Settings:
    """
    Every configurable value of the toolkit, grouped by section. A settings
    file holds `section.key=value` lines; blank lines and lines starting
    with # are skipped.
    """

    synthesis: SynthesisConfig = field(default_factory=SynthesisConfig)
    generation: GenerationConfig = field(default_factory=GenerationConfig)
    canon: CanonConfig = field(default_factory=CanonConfig)
    oracle: OracleConfig = field(default_factory=OracleConfig)

    @staticmethod
    def from_file(path: str) -> Settings:
        """
        Loads settings from a key=value file, starting from the defaults.

        :param path: the settings file
        :return: the loaded settings
        :raises ConfigError: on unreadable files, malformed lines or unknown keys
        """
        settings = Settings()
        try:
            with open(path, encoding="utf-8") as handle:
                lines = handle.readlines()
        except OSError as e:
            raise ConfigError(f"Cannot read config file {path}: {e}") from e
        for number, raw in enumerate(lines, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            if "=" not in line:
                raise ConfigError(f"{path}:{number}: expected key=value, got {line!r}")
            key, value = (part.strip() for part in line.split("=", 1))
            settings.set(key, value)
        logger.info(f"Loaded settings from {path}")
        return settings

    def set(self, key: str, value: str) -> None:
        """
        Overrides one value by its dotted key.

        :param key: a key such as synthesis.max_recursion_depth
        :param value: the raw text of the value
        :raises ConfigError: on unknown keys or values of the wrong type
        """
        section_name, _, name = key.partition(".")
        section = getattr(self, section_name, None) if section_name in _SECTIONS else None
        if section is None or name not in {f.name for f in fields(section)}:
            raise ConfigError(f"Unknown setting {key!r}")
        kind = typing.get_type_hints(type(section))[name]
        setattr(section, name, _coerce(key, value, kind))
        if isinstance(section, SynthesisConfig):
            section.__post_init__()


_SECTIONS = ("synthesis", "generation", "canon", "oracle")
_TRUE = ("1", "true", "yes", "on")
_FALSE = ("0", "false", "no", "off")


def _coerce(key: str, value: str, kind: type):
    try:
        if kind is bool:
            if value.lower() in _TRUE:
                return True
            if value.lower() in _FALSE:
                return False
            raise ValueError(value)
        if isinstance(kind, type) and issubclass(kind, Enum):
            for member in kind:
                if value.lower() in (member.name.lower(), str(member)):
                    return member
            raise ValueError(value)
        return kind(value)
    except ValueError as e:
        raise ConfigError(f"Bad value {value!r} for {key}") from e
