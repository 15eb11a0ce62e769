from __future__ import annotations

from fractions import Fraction

import pytest

from neurologic.contracts.oracle_models import GenParams
from neurologic.contracts.report_models import SemanticsEnvelope
from neurologic.core.numbers import NEG_INFINITY
from neurologic.exceptions import ParseError, ParseErrorGroup, ValidationError
from neurologic.nets.semantics import answer_sets
from neurologic.oracle.generator import random_net, random_program
from neurologic.programs.program import NeuralRule
from neurologic.textio import parser as parser_module
from neurologic.textio import (
    SourceSpan,
    TokenKind,
    family_json,
    net_json,
    parse_net,
    parse_program,
    rational_json,
    serialize_net,
    serialize_program,
    to_json,
    tokenize,
)
from neurologic.translate.passes import net_to_program

N1_PROGRAM_TEXT = "a.\ntheta b = 1.\ntheta c = 0.\nb <- a.\nc <- b : -1.\n"


def test_tokenize_rule():
    tokens = tokenize("c <- b : -1/2.")
    assert [token.kind for token in tokens] == [
        TokenKind.IDENT,
        TokenKind.RULE_ARROW,
        TokenKind.IDENT,
        TokenKind.COLON,
        TokenKind.RATIONAL,
        TokenKind.DOT,
        TokenKind.EOF,
    ]
    assert tokens[4].text == "-1/2"
    assert tokens[4].span == SourceSpan("<input>", 1, 10, 4)


def test_theta_declaration_comes_first_in_universe():
    prog = parse_program("theta b = 1. a. b <- a : 1.")
    assert prog.universe == ("b", "a")
    assert prog.sig.theta["a"] is NEG_INFINITY
    assert prog.sig.theta["b"] == 1
    assert prog.rules == (NeuralRule("b", (("a", Fraction(1)),)), NeuralRule("a"))


def test_empty_file_is_empty_program():
    prog = parse_program("")
    assert prog.universe == ()
    assert prog.rules == ()
    assert parse_net("").universe == ()


def test_ordinary_default_threshold():
    prog = parse_program("a. b. c <- a, b. c <- b.")
    assert prog.sig.theta["c"] == 2


def test_rule_less_neuron_gets_zero_threshold():
    prog = parse_program("theta b = 1. b <- z : 2.")
    assert prog.universe == ("b", "z")
    assert prog.sig.theta["z"] == 0
    assert prog.rules_for("z") == ()


def test_decimal_weights_are_exact():
    prog = parse_program("a. theta b = 0.5. b <- a : 0.25.")
    assert prog.sig.theta["b"] == Fraction(1, 2)
    assert prog.rules_for("b")[0].body == (("a", Fraction(1, 4)),)


def test_running_example_program_round_trip(n1):
    prog = parse_program(N1_PROGRAM_TEXT)
    assert prog == net_to_program(n1)
    assert serialize_program(prog) == N1_PROGRAM_TEXT


def test_running_example_net_round_trip(n1, n1_text):
    assert parse_net(n1_text) == n1
    assert serialize_net(n1) == n1_text.replace("% running example\n", "")


def test_positive_fragment_from_text(positive_fragment):
    assert parse_net("node a fact. node b theta 1. edge a -> b : 1.") == positive_fragment


def test_zero_weight_rejected_unless_permitted():
    with pytest.raises(ParseError) as caught:
        parse_program("a. b <- a : 0.")
    assert caught.value.category == "validation"
    assert caught.value.span.line == 1
    assert caught.value.span.column == 13
    assert "zero weight" in caught.value.message

    prog = parse_program("a. theta b = 1. b <- a : 0.", permit_zero_weights=True)
    assert prog.rules_for("b")[0].body == (("a", Fraction(0)),)


def test_missing_threshold():
    with pytest.raises(ParseError, match="missing threshold") as caught:
        parse_program("a. b <- a : 1/2.")
    assert "non-fact neuron 'b' lacks a threshold" in caught.value.message


@pytest.mark.parametrize(
    ("text", "category", "column"),
    [
        ("a <- .", "syntactic", 6),
        ("a; b.", "lexical", 2),
        ("a. b <- a : 1/0.", "lexical", 13),
        ("a. theta a = 1.", "validation", 10),
        ("a. b <- a, a.", "validation", 12),
    ],
)
def test_program_error_categories(text, category, column):
    with pytest.raises(ParseError) as caught:
        parse_program(text, file="bad.nlp")
    assert caught.value.category == category
    assert caught.value.span.column == column
    assert str(caught.value).startswith(f"bad.nlp:1:{column}: {category} error")


@pytest.mark.parametrize(
    "text",
    [
        "node a fact. node a fact.",
        "node a fact. node b theta 1. edge a -> c : 1.",
        "node a fact. node b fact. edge a -> b : 1.",
        "node a fact. node b theta 1.",
        "node a fact. node b theta 1. edge a -> b : 0.",
        "node a fact. node b theta 1. edge a -> b : 1. edge a -> b : 2.",
    ],
)
def test_net_validation_errors(text):
    with pytest.raises(ParseError) as caught:
        parse_net(text)
    assert caught.value.category == "validation"


def test_net_syntax_error():
    with pytest.raises(ParseError) as caught:
        parse_net("link a b.")
    assert caught.value.category == "syntactic"


def test_collect_errors_reports_every_statement():
    text = "a <- .\nb ; c.\nd <- a : 0.\n"
    with pytest.raises(ParseErrorGroup) as caught:
        parse_program(text, collect_errors=True)
    found = [(error.span.line, error.category) for error in caught.value.errors]
    assert found == [(2, "lexical"), (1, "syntactic"), (2, "syntactic"), (3, "validation")]

    with pytest.raises(ParseError):
        parse_program(text)


def test_crlf_and_comments_are_accepted():
    crlf = "% header\r\na.\r\ntheta b = 1. % inline\r\nb <- a.\r\n"
    assert parse_program(crlf) == parse_program("a.\ntheta b = 1.\nb <- a.\n")
    with pytest.raises(ParseError) as caught:
        parse_program(crlf + "b <- .\r\n")
    assert caught.value.span.line == 5


def test_random_nets_round_trip():
    params = GenParams(min_neurons=1, max_neurons=8, seed=606)
    for index in range(1000):
        net = random_net(params, index)
        text = serialize_net(net)
        parsed = parse_net(text)
        assert parsed == net
        assert serialize_net(parsed) == text


def test_random_programs_round_trip():
    params = GenParams(min_neurons=1, max_neurons=8, max_rules_per_head=3, seed=707)
    for index in range(1000):
        prog = random_program(params, index)
        text = serialize_program(prog)
        parsed = parse_program(text)
        assert parsed == prog
        assert serialize_program(parsed) == text


def test_json_answer_sets(n1):
    text = to_json("answer_sets", n1.universe, answer_sets=family_json(n1.sig, answer_sets(n1)))
    envelope = SemanticsEnvelope.model_validate_json(text)
    assert envelope.kind == "answer_sets"
    assert envelope.universe == ["a", "b", "c"]
    assert envelope.model_extra["answer_sets"] == [["a", "b"]]
    assert text == to_json("answer_sets", n1.universe, answer_sets=family_json(n1.sig, answer_sets(n1)))


def test_json_rationals_stay_exact(n1):
    assert rational_json(Fraction(2)) == "2/1"
    assert rational_json(NEG_INFINITY) == "-inf"
    payload = net_json(n1)
    assert payload["theta"] == {"a": "-inf", "b": "1/1", "c": "0/1"}
    assert payload["edges"][1] == {"source": "b", "target": "c", "weight": "-1/1"}


def _refuse(message: str):
    def build(*args, **kwargs):
        raise ValidationError(message)

    return build


def test_program_construction_error_points_at_named_neuron(monkeypatch):
    monkeypatch.setattr(parser_module, "Program", _refuse("neuron 'b'를 받아들일 수 없습니다"))
    with pytest.raises(ParseError) as caught:
        parse_program("a.\ntheta c = 1.\nc <- a, b.\n", file="p.nlp")
    assert caught.value.category == "validation"
    assert caught.value.span == SourceSpan("p.nlp", 3, 9, 1)


def test_program_construction_error_without_name_points_at_first_statement(monkeypatch):
    monkeypatch.setattr(parser_module, "Program", _refuse("규칙 구성 실패"))
    with pytest.raises(ParseError) as caught:
        parse_program("\ntheta c = 1.\nc <- a.\n", file="p.nlp")
    assert (caught.value.span.line, caught.value.span.column) == (2, 7)


def test_net_construction_error_points_at_node_or_edge(monkeypatch, n1_text):
    monkeypatch.setattr(parser_module, "Net", _refuse("neuron 'c': 구성 실패"))
    with pytest.raises(ParseError) as caught:
        parse_net(n1_text, file="n1.nnet")
    assert (caught.value.span.line, caught.value.span.column) == (4, 6)

    monkeypatch.setattr(parser_module, "Net", _refuse("간선 b -> c 구성 실패"))
    with pytest.raises(ParseError) as caught:
        parse_net(n1_text, file="n1.nnet")
    assert (caught.value.span.line, caught.value.span.column) == (6, 6)
