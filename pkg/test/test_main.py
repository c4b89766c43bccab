import json

import pytest

import main
from resyn.config import Settings
from resyn.controller import CommandController
from resyn.examplegen import read_corpus
from resyn.view import OutputFormat


def _run(tmp_path, *argv: str) -> int:
    return main.run(["--log_path", str(tmp_path / "logs"), *argv])


def _command(tmp_path, *argv: str, output_format: OutputFormat = OutputFormat.JSON) -> str:
    args = main._process_arguments(["--log_path", str(tmp_path / "logs"), *argv])
    return CommandController(Settings(), output_format).dispatch(args)


def _write(tmp_path, name: str, text: str) -> str:
    path = tmp_path / name
    path.write_text(text, encoding="utf-8")
    return str(path)


def test_validate_exit_ok(tmp_path, capsys):
    patterns = _write(tmp_path, "patterns.txt", "\\d+\n(a\n")
    assert _run(tmp_path, "validate", patterns) == main.EXIT_OK
    assert capsys.readouterr().out.splitlines() == ["Ok", "Unparsable"]


def test_usage_error(tmp_path):
    assert _run(tmp_path, "synth") == main.EXIT_USAGE, "synth without positives is a usage error"


def test_unknown_setting(tmp_path):
    patterns = _write(tmp_path, "patterns.txt", "a\n")
    assert _run(tmp_path, "--set", "nowhere.key=1", "validate", patterns) == main.EXIT_USAGE


def test_bad_arguments(tmp_path):
    with pytest.raises(SystemExit) as info:
        _run(tmp_path, "frobnicate")
    assert info.value.code == main.EXIT_USAGE


def test_bad_compare(tmp_path):
    with pytest.raises(SystemExit) as info:
        _run(tmp_path, "eval", "corpus.jsonl", "--compare", "oracle,neural")
    assert info.value.code == main.EXIT_USAGE


def test_missing_corpus(tmp_path):
    assert _run(tmp_path, "eval", str(tmp_path / "missing.jsonl")) == main.EXIT_CORPUS


def test_canonicalize_command(tmp_path):
    patterns = _write(tmp_path, "patterns.txt", "a|b\n^abc$\n(a\n")
    output = _command(tmp_path, "canonicalize", patterns, output_format=OutputFormat.TABLE)
    assert output.splitlines() == ["[ab]", "abc", "rejected: Unparsable"]


def test_canonicalize_preserving(tmp_path):
    patterns = _write(tmp_path, "patterns.txt", "a{2,30}\n")
    rows = json.loads(_command(tmp_path, "canonicalize", patterns, "--mode", "preserving"))
    assert rows == [{"pattern": "a{2,30}", "result": "a{2,30}", "accepted": True}]


def test_align_command(tmp_path):
    strings = _write(tmp_path, "strings.txt", "http\nftps\n")
    report = json.loads(_command(tmp_path, "align", strings))
    assert report["c_align"] == report["c_decomp"] == report["c_lang_expr"] == 6


def test_synth_command(tmp_path):
    document = json.loads(_command(tmp_path, "synth", "--pos", "12", "--pos", "345", "--neg", "a1"))
    assert document["regex"] == "\\d+"
    assert document["success"]
    assert document["tree"]["node"] == "leaf"


def test_synth_oracle_needs_gt(tmp_path):
    with pytest.raises(ValueError):
        _command(tmp_path, "synth", "--pos", "1", "--pos", "2", "--router", "oracle")


def test_gen_eval_stats_dedup(tmp_path):
    patterns = _write(tmp_path, "patterns.txt", "# two shapes\n\\d+\n[a-z]+-\\d+\n")
    corpus = str(tmp_path / "corpus.jsonl")
    generated = json.loads(_command(tmp_path, "gen", patterns, "-o", corpus))
    assert generated == {"output": corpus, "patterns": 2, "instances": 2}
    assert [instance.id for instance in read_corpus(corpus)] == ["inst-0000", "inst-0001"]

    reports = json.loads(_command(tmp_path, "eval", corpus))
    assert len(reports) == 1
    assert reports[0]["suite"] == "oracle"
    assert reports[0]["instances"] == 2
    assert reports[0]["success_rate"] == 100.0

    stats = json.loads(_command(tmp_path, "stats", corpus))
    assert stats["instances"] == 2
    assert stats["top_level"] == {"Repetition": 1, "Concat": 1}

    deduped = str(tmp_path / "deduped.jsonl")
    summary = json.loads(_command(tmp_path, "dedup", corpus, "-o", deduped))
    assert summary == {"input": 2, "kept": 2, "output": deduped}


def test_eval_compare_csv(tmp_path):
    patterns = _write(tmp_path, "patterns.txt", "\\d+\n")
    corpus = str(tmp_path / "corpus.jsonl")
    _command(tmp_path, "gen", patterns, "-o", corpus)
    output = _command(tmp_path, "eval", corpus, "--compare", "oracle,base-only", output_format=OutputFormat.CSV)
    lines = output.splitlines()
    assert lines[0] == "suite,bucket,instances,success_rate"
    assert len(lines) == 1 + 2 * 6
