"""
목적:
- 시드로 재현 가능한 무작위 넷/ordinary 넷/프로그램 생성기를 제공한다.

설명:
- 인스턴스 i의 난수 스트림은 `SeedSequence([seed, i])`에서 파생한다. 같은 (params, index)는
  항상 같은 인스턴스를 만든다.
- 뉴런 이름은 n0, n1, … 이며 fact가 앞에 온다. fact가 아닌 뉴런은 들어오는 간선(또는 규칙 body)이
  적어도 하나 있다. acyclic이면 앞선 뉴런에서만 간선을 받는다.
- 가중치는 분자/분모 상한 안의 기약 유리수다. 임계값은 body의 무작위 부분집합 가중합으로 뽑아
  실제로 도달 가능한 값이 되게 한다. θ ≤ 0인 뉴런은 빈 해석에서도 발화한다.
  positive_thresholds이면 θ > 0으로 올려 T_N(∅) = facts(N)이 성립하게 한다.

디자인 패턴:
- 팩토리 함수(Factory Function).

참조:
- src_py/neurologic/contracts/oracle_models.py
- src_py/neurologic/oracle/experiment.py
"""

from __future__ import annotations

import logging
from collections.abc import Sequence
from fractions import Fraction

import numpy as np

from neurologic.contracts.oracle_models import GenParams
from neurologic.core.numbers import NEG_INFINITY, ExtendedRational
from neurologic.core.signature import NeuronId, Signature
from neurologic.exceptions import InfeasibleParamsError
from neurologic.nets.net import Net
from neurologic.programs.program import NeuralRule, Program

logger = logging.getLogger(__name__)


def instance_rng(params: GenParams, index: int = 0) -> np.random.Generator:
    """(seed, index)에서 파생한 독립 난수 생성기."""
    return np.random.default_rng(np.random.SeedSequence([params.seed, index]))


def _check_feasible(params: GenParams) -> None:
    if params.min_facts > params.max_neurons:
        raise InfeasibleParamsError(
            f"min_facts={params.min_facts}가 max_neurons={params.max_neurons}보다 큽니다"
        )
    if params.acyclic and params.max_facts == 0 and params.max_neurons > 0:
        raise InfeasibleParamsError("acyclic 생성에는 fact가 하나 이상 필요합니다 (max_facts ≥ 1)")


def _shape(params: GenParams, rng: np.random.Generator) -> tuple[list[NeuronId], int]:
    low = max(params.min_neurons, params.min_facts)
    count = int(rng.integers(low, params.max_neurons + 1))
    fact_count = int(rng.integers(params.min_facts, min(params.max_facts, count) + 1))
    if params.acyclic and count > 0:
        fact_count = max(fact_count, 1)
    return [f"n{position}" for position in range(count)], fact_count


def _random_weight(params: GenParams, rng: np.random.Generator) -> Fraction:
    numerator = int(rng.integers(1, params.max_numerator + 1))
    denominator = int(rng.integers(1, params.max_denominator + 1))
    sign = -1 if rng.random() < params.negative_weight_fraction else 1
    return Fraction(sign * numerator, denominator)


def _pick_sources(
    names: Sequence[NeuronId],
    position: int,
    params: GenParams,
    rng: np.random.Generator,
) -> list[NeuronId]:
    candidates = list(names[:position]) if params.acyclic else list(names)
    chosen = [name for name in candidates if rng.random() < params.edge_density]
    if not chosen:
        chosen = [candidates[int(rng.integers(len(candidates)))]]
    return chosen


def _reachable_threshold(weights: Sequence[Fraction], rng: np.random.Generator, positive: bool) -> Fraction:
    """body 가중치의 무작위 부분합. positive이면 0보다 큰 값으로 올린다."""
    mask = rng.random(len(weights)) < 0.5
    total = sum((weight for weight, keep in zip(weights, mask, strict=True) if keep), Fraction(0))
    if positive and total <= 0:
        gains = [weight for weight in weights if weight > 0]
        return min(gains) if gains else Fraction(1)
    return total


def random_net(params: GenParams, index: int = 0) -> Net:
    """무작위 넷. negative_weight_fraction=0이면 positive다."""
    _check_feasible(params)
    rng = instance_rng(params, index)
    names, fact_count = _shape(params, rng)

    theta: dict[NeuronId, ExtendedRational] = {name: NEG_INFINITY for name in names[:fact_count]}
    weights: dict[tuple[NeuronId, NeuronId], Fraction] = {}
    for position in range(fact_count, len(names)):
        target = names[position]
        incoming: list[Fraction] = []
        for source in _pick_sources(names, position, params, rng):
            weight = _random_weight(params, rng)
            weights[(source, target)] = weight
            incoming.append(weight)
        theta[target] = _reachable_threshold(incoming, rng, params.positive_thresholds)
    return Net(sig=Signature(tuple(names), theta), weights=weights)


def random_ordinary_net(params: GenParams, index: int = 0) -> Net:
    """단위 가중치, θ(a) = |b_N(a)| 인 무작위 넷."""
    _check_feasible(params)
    rng = instance_rng(params, index)
    names, fact_count = _shape(params, rng)

    theta: dict[NeuronId, ExtendedRational] = {name: NEG_INFINITY for name in names[:fact_count]}
    weights: dict[tuple[NeuronId, NeuronId], Fraction] = {}
    for position in range(fact_count, len(names)):
        target = names[position]
        sources = _pick_sources(names, position, params, rng)
        weights.update({(source, target): Fraction(1) for source in sources})
        theta[target] = Fraction(len(sources))
    return Net(sig=Signature(tuple(names), theta), weights=weights)


def random_program(params: GenParams, index: int = 0) -> Program:
    """헤드당 1..max_rules_per_head개 규칙을 가진 무작위 프로그램.

    ordinary이면 단위 가중치를 쓰고, 한 헤드의 규칙은 모두 같은 body 크기(= θ)를 가진다.
    """
    _check_feasible(params)
    rng = instance_rng(params, index)
    names, fact_count = _shape(params, rng)

    theta: dict[NeuronId, ExtendedRational] = {name: NEG_INFINITY for name in names[:fact_count]}
    rules: list[NeuralRule] = [NeuralRule(name) for name in names[:fact_count]]
    for position in range(fact_count, len(names)):
        head = names[position]
        rule_count = int(rng.integers(1, params.max_rules_per_head + 1))
        if params.ordinary:
            candidates = list(names[:position]) if params.acyclic else list(names)
            size = int(rng.integers(1, len(candidates) + 1))
            for _ in range(rule_count):
                picked = rng.choice(len(candidates), size=size, replace=False)
                body = tuple((candidates[int(slot)], Fraction(1)) for slot in sorted(picked))
                rules.append(NeuralRule(head, body))
            theta[head] = Fraction(size)
            continue
        first_weights: list[Fraction] = []
        for rule_index in range(rule_count):
            body = tuple(
                (source, _random_weight(params, rng)) for source in _pick_sources(names, position, params, rng)
            )
            if rule_index == 0:
                first_weights = [weight for _, weight in body]
            rules.append(NeuralRule(head, body))
        theta[head] = _reachable_threshold(first_weights, rng, params.positive_thresholds)
    return Program(sig=Signature(tuple(names), theta), rules=tuple(rules))
