from __future__ import annotations

import argparse

import pytest

from neurologic.cli import main
from neurologic.cli.loading import build_config, load_operand
from neurologic.config.models import SemanticsConfig
from neurologic.contracts.report_models import SemanticsEnvelope
from neurologic.exceptions import ParseError

N1_PROGRAM_TEXT = "a.\ntheta b = 1.\ntheta c = 0.\nb <- a.\nc <- b : -1.\n"


@pytest.fixture
def n1_program_file(tmp_path) -> str:
    path = tmp_path / "n1.nlp"
    path.write_text(N1_PROGRAM_TEXT, encoding="utf-8")
    return str(path)


@pytest.fixture
def fragment_file(tmp_path) -> str:
    path = tmp_path / "fragment.nnet"
    path.write_text("node a fact.\nnode b theta 1.\nedge a -> b : 1.\n", encoding="utf-8")
    return str(path)


def test_answer_sets_of_running_example(n1_file, capsys):
    assert main(["answersets", n1_file]) == 0
    assert capsys.readouterr().out == "{a, b}\n"


def test_answer_sets_json(n1_file, capsys):
    assert main(["answersets", n1_file, "--json"]) == 0
    envelope = SemanticsEnvelope.model_validate_json(capsys.readouterr().out)
    assert envelope.kind == "answer_sets"
    assert envelope.universe == ["a", "b", "c"]
    assert envelope.model_extra["answer_sets"] == [["a", "b"]]


def test_flp_on_net_goes_through_translation(n1_file, capsys):
    assert main(["answersets", n1_file, "--semantics", "flp"]) == 0
    captured = capsys.readouterr()
    assert captured.out == "{a, b}\n"
    assert captured.err.startswith("[note] ")


def test_ultimate_answer_sets(n1_file, n1_program_file, capsys):
    assert main(["answersets", n1_file, "--semantics", "ultimate"]) == 0
    assert main(["answersets", n1_program_file, "--semantics", "ultimate"]) == 0
    assert capsys.readouterr().out == "{a, b}\n{a, b}\n"


def test_supported_models(n1_file, capsys):
    assert main(["models", n1_file, "--supported"]) == 0
    assert capsys.readouterr().out == "{a, b}\n"


def test_tp_trace(n1_file, capsys):
    assert main(["tp", n1_file, "--steps", "3"]) == 0
    assert capsys.readouterr().out.splitlines() == [
        "step 0: {}",
        "step 1: {a, c}",
        "step 2: {a, b, c}",
        "step 3: {a, b}",
        "not converged",
    ]


def test_tp_single_application(n1_file, capsys):
    assert main(["tp", n1_file, "-I", "a,b"]) == 0
    assert capsys.readouterr().out == "{a, b}\n"


def test_lfp_on_positive_and_negative_nets(n1_file, fragment_file, capsys):
    assert main(["lfp", fragment_file]) == 0
    assert capsys.readouterr().out == "{a, b}\n"
    assert main(["lfp", n1_file]) == 3
    err = capsys.readouterr().err
    assert err.startswith("[error] ")
    assert "net is not positive" in err


def test_equivalent_net_and_program(n1_file, n1_program_file, capsys):
    assert main(["equiv", n1_file, n1_program_file]) == 0
    assert capsys.readouterr().out == "subsumption: equivalent\n"


def test_non_equivalent_witness(n1_file, fragment_file, capsys):
    assert main(["equiv", n1_file, fragment_file]) == 1
    assert capsys.readouterr().out.splitlines() == [
        "subsumption: not equivalent",
        "  witness: {}",
        "  left:  {a, c}",
        "  right: {a}",
    ]
    assert main(["equiv", n1_file, fragment_file, "--strict"]) == 3


def test_equivalence_json(n1_file, fragment_file, capsys):
    assert main(["equiv", n1_file, fragment_file, "--json"]) == 1
    envelope = SemanticsEnvelope.model_validate_json(capsys.readouterr().out)
    verdict = envelope.model_extra["verdict"]
    assert verdict["equivalent"] is False
    assert verdict["counterexample"]["interpretation"] == []


def test_equivalence_ladder(n1_file, n1_program_file, capsys):
    assert main(["equiv", n1_file, n1_program_file, "--all"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[:4] == [
        "subsumption: equivalent",
        "supported: equivalent",
        "answerset: equivalent",
        "ultimate: equivalent",
    ]
    assert lines[4].startswith("least: skipped (")


def test_translate_both_ways(n1_file, n1_program_file, n1_text, capsys):
    assert main(["translate", n1_file, "--to", "program"]) == 0
    assert capsys.readouterr().out == N1_PROGRAM_TEXT
    assert main(["translate", n1_program_file, "--to", "net"]) == 0
    assert capsys.readouterr().out == n1_text.replace("% running example\n", "")
    assert main(["translate", n1_file, "--to", "program", "--ordinary"]) == 3
    assert main(["translate", n1_file, "--to", "net"]) == 2


def test_parse_json_structure(n1_file, capsys):
    assert main(["parse", n1_file, "--json"]) == 0
    envelope = SemanticsEnvelope.model_validate_json(capsys.readouterr().out)
    assert envelope.model_extra["format"] == "net"
    assert envelope.model_extra["classification"]["positive"] is False
    assert envelope.model_extra["edges"][0] == {"source": "a", "target": "b", "weight": "1/1"}


def test_eval_and_truth_table(xor_file, capsys):
    assert main(["eval", xor_file, "--input", "x,y"]) == 0
    assert capsys.readouterr().out == "{}\n"
    assert main(["eval", xor_file, "--table"]) == 0
    assert capsys.readouterr().out.splitlines() == [
        "{} -> {}",
        "{x} -> {z}",
        "{y} -> {z}",
        "{x, y} -> {}",
    ]
    assert main(["eval", xor_file]) == 2
    assert main(["eval", xor_file, "--input", "h1"]) == 3


def test_layers(xor_file, capsys):
    assert main(["layers", xor_file]) == 0
    assert capsys.readouterr().out.splitlines() == [
        "layer 1: {x, y}",
        "layer 2: {h1, h2}",
        "layer 3: {z}",
    ]


def test_parse_errors_exit_three(tmp_path, capsys):
    bad = tmp_path / "bad.nlp"
    bad.write_text("a <- .\nb ; c.\n", encoding="utf-8")
    assert main(["parse", str(bad)]) == 3
    assert f"[error] {bad}:2:3: lexical error" in capsys.readouterr().err
    assert main(["parse", str(bad), "--all-errors"]) == 3
    assert len(capsys.readouterr().err.splitlines()) == 3


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["lfp"],
        ["answersets", "net.nnet", "--semantics", "stable"],
        ["lfp", "missing.nnet"],
        ["lfp", "model.txt"],
    ],
)
def test_usage_errors_exit_two(argv, capsys):
    assert main(argv) == 2


def test_version_exits_zero(capsys):
    assert main(["--version"]) == 0
    assert capsys.readouterr().out.startswith("neurologic ")


def test_enumeration_cap(n1_file, monkeypatch, capsys):
    assert main(["models", n1_file, "--cap", "2"]) == 4
    assert main(["models", n1_file, "--cap", "99"]) == 2
    monkeypatch.setenv("NEUROLOGIC_ENUM_CAP", "2")
    assert main(["models", n1_file]) == 4
    monkeypatch.setenv("NEUROLOGIC_ENUM_CAP", "many")
    assert main(["models", n1_file]) == 2


def test_explore_flp(tmp_path, capsys):
    assert main(["explore-flp", "--count", "5", "--max-neurons", "4", "--seed", "3"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "instances: 5"
    assert main(["explore-flp", "--count", "5", "--max-neurons", "9"]) == 2
    assert main(["explore-flp", "--count", "5", "--max-neurons", "4", "--positive", "--ordinary", "--json"]) == 0
    envelope = SemanticsEnvelope.model_validate_json(capsys.readouterr().out)
    assert envelope.model_extra["report"]["counterexamples"] == []
    assert main(["explore-flp", "--count", "20", "--max-neurons", "4", "--out", str(tmp_path / "cex")]) == 0
    assert (tmp_path / "cex").is_dir()


def test_zero_weight_flag_reaches_the_parser(tmp_path, capsys):
    zero = tmp_path / "zero.nlp"
    zero.write_text("a.\ntheta b = 1.\nb <- a : 0.\n", encoding="utf-8")
    assert main(["parse", str(zero)]) == 3
    assert "zero weight" in capsys.readouterr().err
    assert main(["parse", str(zero), "--permit-zero-weights", "--json"]) == 0
    envelope = SemanticsEnvelope.model_validate_json(capsys.readouterr().out)
    assert envelope.model_extra["rules"][1]["body"] == [{"neuron": "a", "weight": "0/1"}]


def test_load_operand_follows_config_not_raw_flag(tmp_path):
    zero = tmp_path / "zero.nlp"
    zero.write_text("a.\ntheta b = 1.\nb <- a : 0.\n", encoding="utf-8")
    args = argparse.Namespace(as_kind=None, all_errors=False, permit_zero_weights=False)
    prog = load_operand(str(zero), args, SemanticsConfig(permit_zero_weights=True))
    assert prog.universe == ("a", "b")
    with pytest.raises(ParseError):
        load_operand(str(zero), args, SemanticsConfig())


def test_build_config_carries_cli_flags():
    args = argparse.Namespace(cap=5, permit_zero_weights=True, strict=True)
    config = build_config(args, environ={})
    assert config.enumeration_cap == 5
    assert config.permit_zero_weights
    assert config.strict_universe


def test_eval_json_lists_names_in_universe_order(xor_file, capsys):
    assert main(["eval", xor_file, "--input", "y,x", "--json"]) == 0
    envelope = SemanticsEnvelope.model_validate_json(capsys.readouterr().out)
    assert envelope.kind == "eval"
    assert envelope.model_extra["input"] == ["x", "y"]
    assert envelope.model_extra["output"] == []
