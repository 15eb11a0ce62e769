from __future__ import annotations

import pytest

from neurologic.contracts.oracle_models import GenParams
from neurologic.core.signature import Signature
from neurologic.exceptions import ConfigurationError, IterationEscapedSublatticeError, NonMonotoneDetectedError
from neurologic.fixpoint.kleene import all_fixed_points, iterate, lfp, stable_revision
from neurologic.nets.semantics import _fitting, t_n
from neurologic.oracle.generator import random_net


def test_lfp_of_positive_fragment(positive_fragment):
    assert lfp(lambda current: t_n(positive_fragment, current)) == {"a", "b"}


def test_lfp_detects_shrinking_chain(n1):
    with pytest.raises(NonMonotoneDetectedError):
        lfp(lambda current: t_n(n1, current))


def test_lfp_monotone_probe_rejects_antitone_operator():
    sig = Signature(("x", "y"), {"x": 0, "y": 0})

    def antitone(current):
        return frozenset() if "y" in current else frozenset({"x"})

    assert lfp(antitone) == {"x"}
    with pytest.raises(NonMonotoneDetectedError):
        lfp(antitone, sig, require_monotone_hint=True, probe_count=256)


def test_iterate_records_every_step(n1):
    trace = iterate(lambda current: t_n(n1, current), frozenset(), 3)
    assert trace.steps == (frozenset(), {"a", "c"}, {"a", "b", "c"}, {"a", "b"})
    assert not trace.converged
    assert trace.last == {"a", "b"}


def test_iterate_stops_at_repeat(positive_fragment):
    trace = iterate(lambda current: t_n(positive_fragment, current), frozenset(), 10)
    assert trace.steps == (frozenset(), {"a"}, {"a", "b"}, {"a", "b"})
    assert trace.converged


def test_iterate_zero_steps_returns_start():
    trace = iterate(lambda current: current, frozenset({"a"}), 0)
    assert trace.steps == (frozenset({"a"}),)
    assert not trace.converged


def test_iterate_rejects_negative_budget():
    with pytest.raises(ConfigurationError):
        iterate(lambda current: current, frozenset(), -1)


def test_all_fixed_points(n1):
    assert all_fixed_points(lambda current: t_n(n1, current), n1.sig) == {frozenset({"a", "b"})}


def test_stable_revision_escape_is_reported_only_when_strict(n1):
    bound = frozenset({"a", "c"})
    revise = lambda current, upper: _fitting(n1, current, upper)  # noqa: E731
    assert stable_revision(revise, bound) == {"a", "b", "c"}
    with pytest.raises(IterationEscapedSublatticeError):
        stable_revision(revise, bound, strict=True)


def test_stable_revision_consistent_only_returns_escaping_iterate(n1):
    revise = lambda current, upper: _fitting(n1, current, upper)  # noqa: E731
    assert stable_revision(revise, frozenset({"a", "c"}), consistent_only=True) == {"a", "b", "c"}


def test_lfp_is_below_every_fixed_point():
    params = GenParams(min_neurons=1, max_neurons=6, negative_weight_fraction=0.0, seed=29)
    for index in range(60):
        net = random_net(params, index)
        op = lambda current, net=net: t_n(net, current)  # noqa: E731
        least = lfp(op, net.sig, require_monotone_hint=True)
        fixed = all_fixed_points(op, net.sig)
        assert least in fixed
        assert all(least <= point for point in fixed)
