"""Command line: golden reports, schema, configuration precedence, corpus files."""

from __future__ import annotations

import json

import jsonschema
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import GOLDEN, SCHEMA_PATH, golden_cases, run_cli
from planemaps.cli.config import DEFAULT_KRONECKER_BOUND, DEFAULT_ORDER, resolve
from planemaps.cli.corpus import CorpusConfig, format_corpus, generate_corpus, read_corpus
from planemaps.errors import DegenerateInput

CASES = golden_cases()
VALIDATOR = jsonschema.Draft202012Validator(json.loads(SCHEMA_PATH.read_text()))


@pytest.mark.parametrize("name", sorted(CASES))
def test_golden_reports_are_byte_stable(name):
    expected = (GOLDEN / f"{name}.json").read_text(encoding="utf-8")
    first = run_cli(CASES[name])
    second = run_cli(CASES[name])
    assert first == second
    assert first[1] == expected
    assert first[0] == (2 if name.startswith("error_") else 0)
    VALIDATOR.validate(json.loads(first[1]))


def test_schema_rejects_floats_for_exact_values():
    report = json.loads((GOLDEN / "invert_parabola.json").read_text())
    report["jacobian"]["jac"] = -1.0
    assert not VALIDATOR.is_valid(report)


def test_command_examples():
    code, text = run_cli(["invert", "--p", "y", "--q", "x + y^2", "--json"])
    inv = json.loads(text)["inverse"]
    assert code == 0 and inv["invertible"] and (inv["g1"], inv["g2"]) == ("-u^2 + v", "u")
    inv = json.loads(run_cli(["invert", "--p", "y^2", "--q", "x", "--json"])[1])["inverse"]
    assert not inv["invertible"] and inv["n"] == 2
    fiber = json.loads(run_cli(["probe", "--p", "y", "--q", "x*y + x", "--c", "-1", "--json"])[1])["fibers"][0]
    (bb,) = fiber["bounded_branches"]
    assert (bb["b0"], bb["b1"]) == ("0", "0") and bb["degenerate_resultant"]
    assert bb["note"].startswith("gap open")


def test_text_output_and_timing():
    code, text = run_cli(["analyze", "--p", "y", "--q", "x + y^2"])
    assert code == 0 and "is_keller: True" in text and "geometric_degree: 1" in text
    report = json.loads(run_cli(["analyze", "--p", "y", "--q", "x", "--timing", "--json"])[1])
    assert report["timing"]["seconds"] >= 0
    VALIDATOR.validate(report)


@pytest.mark.parametrize(
    "argv,code,position",
    [
        (["analyze", "--p", "x + w", "--q", "y"], "UnknownVariable", 4),
        (["analyze", "--p", "x^-1", "--q", "y"], "NegativeExponent", 2),
        (["analyze", "--p", "x", "--q", "(y"], "ParseError", 2),
        (["probe", "--p", "y", "--q", "x"], "DegenerateInput", None),
        (["analyze", "--p", "y"], "DegenerateInput", None),
        (["analyze", "--p", "0", "--q", "y"], "DegenerateMap", None),
    ],
)
def test_errors_are_machine_readable(argv, code, position):
    exit_code, text = run_cli(argv + ["--json"])
    assert exit_code == 2
    err = json.loads(text)["error"]
    assert err["code"] == code and err.get("position") == position
    VALIDATOR.validate({"error": err})


def test_error_goes_to_stderr_without_json(capsys):
    exit_code, text = run_cli(["analyze", "--p", "x +", "--q", "y"])
    assert exit_code == 2 and text == ""
    assert "error [ParseError]" in capsys.readouterr().err


def test_flags_beat_environment_beat_defaults():
    cfg = resolve(env={})
    assert (cfg.order, cfg.kronecker_bound, cfg.seed) == (DEFAULT_ORDER, DEFAULT_KRONECKER_BOUND, 0)
    env = {"ORDER": "9", "KRONECKER_BOUND": "5", "SEED": "4"}
    cfg = resolve(env=env)
    assert (cfg.order, cfg.kronecker_bound, cfg.seed) == (9, 5, 4)
    cfg = resolve(order=3, kronecker_bound=2, seed=1, env=env)
    assert (cfg.order, cfg.kronecker_bound, cfg.seed) == (3, 2, 1)
    assert resolve(env={"ORDER": " "}).order == DEFAULT_ORDER
    with pytest.raises(DegenerateInput):
        resolve(env={"ORDER": "many"})
    with pytest.raises(DegenerateInput):
        resolve(order=0, env={})


def test_environment_reaches_the_report():
    argv = ["puiseux", "--p", "y^2 - x", "--q", "y", "--c", "1", "--json"]
    report = json.loads(run_cli(argv, env={"ORDER": "5", "KRONECKER_BOUND": "3"})[1])
    assert report["config"] == {"order": 5, "kronecker_bound": 3}
    assert all(b["order"] == 5 for b in report["fibers"][0]["branches"])
    report = json.loads(run_cli(argv + ["--order", "7"], env={"ORDER": "5"})[1])
    assert report["config"]["order"] == 7
    a = run_cli(["corpus", "--n", "3", "--json"], env={"SEED": "12"})[1]
    b = run_cli(["corpus", "--n", "3", "--seed", "12", "--json"])[1]
    assert a == b and json.loads(a)["corpus"]["seed"] == 12


def test_corpus_file_is_reproducible(tmp_path):
    paths = [tmp_path / "a.txt", tmp_path / "b.txt", tmp_path / "c.txt"]
    for path, seed in zip(paths, ("5", "5", "6")):
        code, text = run_cli(["corpus", "--n", "12", "--seed", seed, "--out", str(path)])
        assert code == 0 and text == f"wrote 12 maps to {path}\n"
    assert paths[0].read_bytes() == paths[1].read_bytes()
    assert paths[0].read_bytes() != paths[2].read_bytes()
    maps = read_corpus(paths[0])
    assert maps == generate_corpus(CorpusConfig(n=12, seed=5))
    assert format_corpus(maps) == paths[0].read_text()


@settings(max_examples=10)
@given(st.integers(0, 10**6))
def test_corpus_round_trips_through_text(seed):
    maps = generate_corpus(CorpusConfig(n=3, seed=seed, depth=3))
    code, text = run_cli(["corpus", "--n", "3", "--depth", "3", "--seed", str(seed)])
    assert code == 0 and text == format_corpus(maps)
