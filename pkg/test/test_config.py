import pytest

from resyn.config import *
from resyn.errors import ConfigError


def test_defaults():
    settings = Settings()
    assert settings.synthesis.max_recursion_depth == 12
    assert settings.generation.max_repeat == 20
    assert settings.canon.repetition_cap == 10
    assert settings.synthesis.class_cost == ClassCost.UNIT


def test_from_file(tmp_path):
    path = tmp_path / "resyn.cfg"
    path.write_text(
        "# budgets\n"
        "synthesis.max_recursion_depth = 5\n"
        "\n"
        "synthesis.fallback_enabled=no\n"
        "synthesis.class_cost=set-size\n"
        "generation.timeout=2.5\n",
        encoding="utf-8",
    )
    settings = Settings.from_file(str(path))
    assert settings.synthesis.max_recursion_depth == 5
    assert settings.synthesis.fallback_enabled is False
    assert settings.synthesis.class_cost == ClassCost.SET_SIZE
    assert settings.generation.timeout == 2.5
    assert settings.oracle == OracleConfig(), "Untouched sections should keep their defaults"


def test_set_override():
    settings = Settings()
    settings.set("oracle.alignment_budget", "50")
    assert settings.oracle.alignment_budget == 50


@pytest.mark.parametrize("key, value", [
    ("synthesis.unknown", "1"),
    ("nowhere.max_repeat", "1"),
    ("max_repeat", "1"),
    ("synthesis.base_budget", "many"),
    ("synthesis.strict_negatives", "maybe"),
    ("synthesis.class_cost", "free"),
    ("synthesis.max_recursion_depth", "0"),
])
def test_set_rejects(key, value):
    with pytest.raises(ConfigError):
        Settings().set(key, value)


def test_from_file_malformed_line(tmp_path):
    path = tmp_path / "bad.cfg"
    path.write_text("synthesis.max_recursion_depth 5\n", encoding="utf-8")
    with pytest.raises(ConfigError):
        Settings.from_file(str(path))


def test_from_file_missing(tmp_path):
    with pytest.raises(ConfigError):
        Settings.from_file(str(tmp_path / "absent.cfg"))


def test_synthesis_config_validation():
    with pytest.raises(ConfigError):
        SynthesisConfig(base_budget=0)


def test_class_cost_labels():
    assert str(ClassCost.SET_SIZE) == "set-size"
    assert ClassCost.UNIT.label == "unit"
