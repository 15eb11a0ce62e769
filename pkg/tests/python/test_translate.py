from __future__ import annotations

from fractions import Fraction

import pytest

from neurologic.contracts.oracle_models import GenParams
from neurologic.core.signature import all_interpretations, all_three_interpretations
from neurologic.exceptions import NotOrdinaryError
from neurologic.nets.semantics import answer_sets, fitting, t_n
from neurologic.oracle.generator import random_net, random_ordinary_net
from neurologic.programs.program import NeuralRule, classify_program
from neurologic.programs.semantics import answer_sets_p, fitting_p, t_p
from neurologic.translate.passes import net_to_program, ordinary_net_to_ordinary_program, program_to_net


def test_running_example_translation(n1):
    prog = net_to_program(n1)
    assert prog.sig == n1.sig
    assert prog.rules == (
        NeuralRule("a"),
        NeuralRule("b", (("a", Fraction(1)),)),
        NeuralRule("c", (("b", Fraction(-1)),)),
    )
    assert classify_program(prog).minimalist
    assert program_to_net(prog) == n1


def test_ordinary_translation_requires_ordinary_net(n1, positive_fragment):
    with pytest.raises(NotOrdinaryError):
        ordinary_net_to_ordinary_program(n1)
    prog = ordinary_net_to_ordinary_program(positive_fragment)
    assert classify_program(prog).ordinary


@pytest.mark.acceptance
def test_net_and_translated_program_share_operator():
    params = GenParams(min_neurons=1, max_neurons=10, seed=101)
    for index in range(500):
        net = random_net(params, index)
        prog = net_to_program(net)
        for members in all_interpretations(net.sig):
            assert t_n(net, members) == t_p(prog, members)


@pytest.mark.acceptance
def test_ordinary_translations_share_operator():
    params = GenParams(min_neurons=1, max_neurons=8, seed=202)
    for index in range(200):
        net = random_ordinary_net(params, index)
        weighted = net_to_program(net)
        ordinary = ordinary_net_to_ordinary_program(net)
        for members in all_interpretations(net.sig):
            assert t_p(weighted, members) == t_p(ordinary, members)


@pytest.mark.acceptance
def test_net_and_translated_program_share_fitting_and_answer_sets():
    params = GenParams(min_neurons=1, max_neurons=6, seed=303)
    for index in range(200):
        net = random_net(params, index)
        prog = net_to_program(net)
        for candidate in all_three_interpretations(net.sig):
            assert fitting(net, candidate) == fitting_p(prog, candidate)
        assert answer_sets(net) == answer_sets_p(prog)


def test_translation_round_trip_on_random_nets():
    params = GenParams(min_neurons=1, max_neurons=7, seed=404)
    for index in range(100):
        net = random_net(params, index)
        assert program_to_net(net_to_program(net)) == net
