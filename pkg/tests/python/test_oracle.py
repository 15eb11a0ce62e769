from __future__ import annotations

import pydantic
import pytest

from neurologic.contracts.oracle_models import ExperimentReport, FlpCounterexample, GenParams
from neurologic.core.signature import ThreeInterpretation, all_interpretations, all_three_interpretations
from neurologic.exceptions import InfeasibleParamsError
from neurologic.nets.net import classify, facts
from neurologic.nets.semantics import fitting, t_n, ultimate
from neurologic.oracle import (
    brute_fitting,
    brute_ultimate,
    flp_vs_aft_experiment,
    random_net,
    random_ordinary_net,
    random_program,
    verify_counterexample,
    write_counterexamples,
)
from neurologic.programs.program import classify_program
from neurologic.textio import parse_program

PARTIAL_BODY_TEXT = "c.\ntheta a = 1.\na <- b, c.\n"


def test_generation_is_reproducible():
    params = GenParams(max_neurons=7, seed=11)
    assert random_net(params, 3) == random_net(params, 3)
    assert random_program(params, 3) == random_program(params, 3)


def test_no_negative_weights_means_positive():
    params = GenParams(max_neurons=6, negative_weight_fraction=0.0, seed=12)
    for index in range(50):
        assert classify(random_net(params, index)).positive


def test_zero_density_still_connects_every_non_fact():
    params = GenParams(min_neurons=5, max_neurons=5, min_facts=0, max_facts=0, edge_density=0.0, seed=13)
    net = random_net(params, 0)
    assert facts(net) == frozenset()
    assert all(len(net.incoming(name)) == 1 for name in net.universe)


def test_all_facts():
    params = GenParams(min_neurons=4, max_neurons=4, min_facts=4, max_facts=4, seed=14)
    net = random_net(params, 0)
    assert facts(net) == frozenset(net.universe)
    assert not net.weights


def test_acyclic_and_ordinary_shapes():
    acyclic = GenParams(max_neurons=7, acyclic=True, seed=15)
    for index in range(50):
        assert classify(random_net(acyclic, index)).acyclic
        assert classify(random_ordinary_net(acyclic, index)).ordinary
        assert classify_program(random_program(acyclic.model_copy(update={"ordinary": True}), index)).ordinary


def test_positive_thresholds_keep_empty_image_to_facts():
    params = GenParams(max_neurons=7, positive_thresholds=True, seed=16)
    for index in range(100):
        net = random_net(params, index)
        assert t_n(net, frozenset()) == facts(net)


@pytest.mark.parametrize(
    "params",
    [
        GenParams(max_neurons=2, min_facts=3, max_facts=3),
        GenParams(max_neurons=3, max_facts=0, acyclic=True),
    ],
)
def test_infeasible_params(params):
    with pytest.raises(InfeasibleParamsError):
        random_net(params, 0)


def test_inverted_ranges_are_rejected():
    with pytest.raises(pydantic.ValidationError):
        GenParams(min_neurons=5, max_neurons=2)
    with pytest.raises(pydantic.ValidationError):
        GenParams(min_facts=2, max_facts=1)


@pytest.mark.acceptance
def test_interval_shortcuts_agree_with_enumeration():
    params = GenParams(max_neurons=6, seed=17)
    for index in range(100):
        net = random_net(params, index)
        for pair in all_three_interpretations(net.sig):
            assert fitting(net, pair) == brute_fitting(net, pair)
            assert ultimate(net, pair) == brute_ultimate(net, pair)
        for members in all_interpretations(net.sig):
            assert brute_fitting(net, ThreeInterpretation.exact(members)) == t_n(net, members)


def test_empty_experiment():
    report = flp_vs_aft_experiment(GenParams(), 0)
    assert report.instances_run == 0
    assert report.counterexamples == []
    assert report.converse_counterexamples == []


def test_experiment_rejects_large_universes():
    with pytest.raises(InfeasibleParamsError):
        flp_vs_aft_experiment(GenParams(max_neurons=9), 1)
    with pytest.raises(InfeasibleParamsError):
        flp_vs_aft_experiment(GenParams(), -1)


@pytest.mark.acceptance
def test_positive_ordinary_programs_have_no_counterexamples():
    params = GenParams(max_neurons=7, negative_weight_fraction=0.0, ordinary=True, seed=18)
    report = flp_vs_aft_experiment(params, 1000)
    assert report.instances_run == 1000
    assert report.aft_subset_flp == 1000
    assert report.flp_subset_aft == 1000
    assert report.counterexamples == []


@pytest.mark.acceptance
def test_experiment_is_reproducible_and_witnesses_verify():
    params = GenParams(max_neurons=7, seed=19)
    report = flp_vs_aft_experiment(params, 1000)
    assert report.instances_run == 1000
    assert report.aft_subset_flp + len({cex.instance for cex in report.counterexamples}) == 1000
    assert report.flp_subset_aft + len({cex.instance for cex in report.converse_counterexamples}) == 1000

    prefix = flp_vs_aft_experiment(params, 100)
    assert prefix == flp_vs_aft_experiment(params, 100)
    assert prefix.counterexamples == [cex for cex in report.counterexamples if cex.instance < 100]
    assert prefix.converse_counterexamples == [
        cex for cex in report.converse_counterexamples if cex.instance < 100
    ]
    for counterexample in [*report.counterexamples, *report.converse_counterexamples]:
        assert verify_counterexample(counterexample)


def test_partial_body_counterexample_verifies_both_ways():
    aft_only = FlpCounterexample(instance=0, program_text=PARTIAL_BODY_TEXT, witness=["a", "c"])
    flp_only = FlpCounterexample(instance=0, program_text=PARTIAL_BODY_TEXT, witness=["c"], direction="flp-not-aft")
    assert verify_counterexample(aft_only)
    assert verify_counterexample(flp_only)
    assert not verify_counterexample(aft_only.model_copy(update={"witness": ["c"]}))


def test_write_counterexamples(tmp_path):
    report = ExperimentReport(
        params=GenParams(),
        instance_count=1,
        counterexamples=[FlpCounterexample(instance=0, program_text=PARTIAL_BODY_TEXT, witness=["a", "c"])],
    )
    written = write_counterexamples(report, tmp_path / "cex")
    assert [path.name for path in written] == ["instance-00000-aft-not-flp-0.nlp"]
    text = written[0].read_text(encoding="utf-8")
    assert text.startswith("% aft-not-flp witness: {a, c}\n")
    assert parse_program(text) == parse_program(PARTIAL_BODY_TEXT)
