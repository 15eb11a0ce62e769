"""
목적:
- 테스트 공통 넷/프로그램 fixture를 제공한다.

설명:
- N1: fact a, a -1-> b (θ=1), b -(-1)-> c (θ=0). 음수 가중치가 있는 비순환 넷.
- XOR: 입력 x, y / 은닉 h1(θ=1), h2(θ=2) / 출력 z(θ=1, h2 가중치 -1).
- P0: {a. ; b ← a:w}, θ(b)=1.
"""

from __future__ import annotations

from fractions import Fraction

import pytest

from neurologic.core.numbers import NEG_INFINITY
from neurologic.core.signature import Signature
from neurologic.nets.net import Net
from neurologic.programs.program import NeuralRule, Program

N1_TEXT = """\
% running example
node a fact.
node b theta 1.
node c theta 0.
edge a -> b : 1.
edge b -> c : -1.
"""

XOR_TEXT = """\
node x fact.
node y fact.
node h1 theta 1.
node h2 theta 2.
node z theta 1.
edge x -> h1 : 1.
edge y -> h1 : 1.
edge x -> h2 : 1.
edge y -> h2 : 1.
edge h1 -> z : 1.
edge h2 -> z : -1.
"""


def make_n1() -> Net:
    sig = Signature(("a", "b", "c"), {"a": NEG_INFINITY, "b": Fraction(1), "c": Fraction(0)})
    return Net(sig, {("a", "b"): Fraction(1), ("b", "c"): Fraction(-1)})


def make_p0(weight: int | Fraction) -> Program:
    sig = Signature(("a", "b"), {"a": NEG_INFINITY, "b": Fraction(1)})
    rules = (NeuralRule("a"), NeuralRule("b", (("a", Fraction(weight)),)))
    return Program(sig, rules, permit_zero_weights=True)


@pytest.fixture
def n1() -> Net:
    return make_n1()


@pytest.fixture
def positive_fragment() -> Net:
    sig = Signature(("a", "b"), {"a": NEG_INFINITY, "b": Fraction(1)})
    return Net(sig, {("a", "b"): Fraction(1)})


@pytest.fixture
def xor_net() -> Net:
    sig = Signature(
        ("x", "y", "h1", "h2", "z"),
        {"x": NEG_INFINITY, "y": NEG_INFINITY, "h1": Fraction(1), "h2": Fraction(2), "z": Fraction(1)},
    )
    weights = {
        ("x", "h1"): Fraction(1),
        ("y", "h1"): Fraction(1),
        ("x", "h2"): Fraction(1),
        ("y", "h2"): Fraction(1),
        ("h1", "z"): Fraction(1),
        ("h2", "z"): Fraction(-1),
    }
    return Net(sig, weights)


@pytest.fixture
def p0_zero() -> Program:
    return make_p0(0)


@pytest.fixture
def p0_unit() -> Program:
    return make_p0(1)


@pytest.fixture
def n1_text() -> str:
    return N1_TEXT


@pytest.fixture
def n1_file(tmp_path) -> str:
    path = tmp_path / "n1.nnet"
    path.write_text(N1_TEXT, encoding="utf-8")
    return str(path)


@pytest.fixture
def xor_file(tmp_path) -> str:
    path = tmp_path / "xor.nnet"
    path.write_text(XOR_TEXT, encoding="utf-8")
    return str(path)
