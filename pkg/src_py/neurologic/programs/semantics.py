"""
목적:
- 신경 논리 프로그램의 의미론 연산을 제공한다.

설명:
- 만족 관계, T_P, 모델/지지 모델/최소 모델, Fitting 연산자 Φ_P와 AFT answer set,
  FLP reduct와 FLP answer set, ultimate 연산자를 다룬다.
- Φ_P는 "어떤 규칙 r이 구간의 모든 K에서 발화한다"(exists-forall)로 정의한다.
  최소주의(minimalist) 번역 P_N 위에서 넷의 Φ_N과 정확히 일치한다.
- ultimate 연산자는 헤드당 규칙이 하나면 규칙별 구간 공식으로, 아니면 구간 열거로 계산한다.
- FLP 최소성 검사는 I의 부분집합만 열거한다. 비최소성을 보이는 reduct 모델은 I 안에 있어야 한다.

디자인 패턴:
- 함수형 서비스 모듈(Functional Service Module).

참조:
- src_py/neurologic/core/firing.py
- src_py/neurologic/fixpoint/kleene.py
- src_py/neurologic/nets/semantics.py
"""

from __future__ import annotations

import logging
from collections.abc import Collection

from neurologic.config.models import DEFAULT_ENUMERATION_CAP
from neurologic.core.firing import body_sum, fires, fires_somewhere, fires_throughout
from neurologic.core.numbers import ext_ge
from neurologic.core.signature import (
    Interpretation,
    NeuronId,
    Signature,
    ThreeInterpretation,
    all_interpretations,
    guard_cap,
    subsets_between,
    subsets_of,
)
from neurologic.exceptions import NotPositiveError, ValidationError
from neurologic.fixpoint.kleene import all_fixed_points, lfp, stable_revision
from neurologic.programs.program import NeuralRule, Program, classify_program

logger = logging.getLogger(__name__)

type SatisfactionTarget = NeuronId | Collection[NeuronId] | NeuralRule | Program


def satisfies(interpretation: Interpretation, target: SatisfactionTarget, sig: Signature | None = None) -> bool:
    """I ⊨ x. 뉴런, body 집합, 규칙(시그니처 필요), 프로그램을 받는다."""
    if isinstance(target, Program):
        target.sig.check(interpretation)
        return all(_satisfies_rule(interpretation, rule, target.sig) for rule in target.rules)
    if isinstance(target, NeuralRule):
        if sig is None:
            raise ValidationError("규칙 만족 판정에는 헤드 임계값을 담은 시그니처가 필요합니다")
        sig.check(interpretation)
        return _satisfies_rule(interpretation, target, sig)
    if isinstance(target, str):
        return target in interpretation
    return frozenset(target) <= interpretation


def _satisfies_rule(interpretation: Interpretation, rule: NeuralRule, sig: Signature) -> bool:
    if ext_ge(body_sum(rule.body, interpretation), sig.theta[rule.head]):
        return rule.head in interpretation
    return True


def t_p(prog: Program, interpretation: Interpretation) -> Interpretation:
    """T_P(I) = {h(r) | r ∈ P, Σ_{b ∈ b(r)} w_b·I(b) ≥ θ(h(r))}."""
    prog.sig.check(interpretation)
    return _t_p(prog, interpretation)


def _t_p(prog: Program, interpretation: Interpretation) -> Interpretation:
    theta = prog.sig.theta
    return frozenset(rule.head for rule in prog.rules if fires(rule.body, interpretation, theta[rule.head]))


def horn_t_p(prog: Program, interpretation: Interpretation) -> Interpretation:
    """ordinary 프로그램의 고전적 즉시 귀결 연산자. body 부분집합 판정만 쓴다."""
    prog.sig.check(interpretation)
    return frozenset(rule.head for rule in prog.rules if rule.atoms <= interpretation)


def models_p(prog: Program, cap: int = DEFAULT_ENUMERATION_CAP) -> frozenset[Interpretation]:
    """T_P의 prefixed point 전체(= 프로그램의 모델 전체)."""
    return frozenset(
        candidate for candidate in all_interpretations(prog.sig, cap) if _t_p(prog, candidate) <= candidate
    )


def supported_models_p(prog: Program, cap: int = DEFAULT_ENUMERATION_CAP) -> frozenset[Interpretation]:
    return all_fixed_points(lambda current: _t_p(prog, current), prog.sig, cap)


def least_model_p(prog: Program, probe_count: int = 0) -> Interpretation:
    """양의 프로그램의 최소 모델."""
    if not classify_program(prog).positive:
        raise NotPositiveError("program is not positive: 음수 가중치가 있어 최소 모델이 정의되지 않습니다")
    return lfp(
        lambda current: _t_p(prog, current),
        prog.sig,
        require_monotone_hint=probe_count > 0,
        probe_count=probe_count,
    )


def fitting_p(prog: Program, pair: ThreeInterpretation) -> Interpretation:
    """Φ_P(I, J): 구간의 모든 K에서 발화하는 규칙이 있는 헤드 집합."""
    pair.check(prog.sig)
    return _fitting_p(prog, pair.lower, pair.upper)


def _fitting_p(prog: Program, lower: Interpretation, upper: Interpretation) -> Interpretation:
    theta = prog.sig.theta
    return frozenset(
        rule.head for rule in prog.rules if fires_throughout(rule.body, lower, upper, theta[rule.head])
    )


def phi_dagger_p(prog: Program, interpretation: Interpretation, *, strict: bool = False) -> Interpretation:
    """Φ_P†(I) = lfp(Φ_P(•, I))."""
    prog.sig.check(interpretation)
    return stable_revision(lambda current, bound: _fitting_p(prog, current, bound), interpretation, strict=strict)


def answer_sets_p(prog: Program, cap: int = DEFAULT_ENUMERATION_CAP) -> frozenset[Interpretation]:
    """Φ_P†(I) = I인 해석 전체."""
    return frozenset(
        candidate
        for candidate in supported_models_p(prog, cap)
        if stable_revision(lambda current, bound: _fitting_p(prog, current, bound), candidate) == candidate
    )


def ultimate_p(prog: Program, pair: ThreeInterpretation, gap_cap: int = DEFAULT_ENUMERATION_CAP) -> ThreeInterpretation:
    """U_P(I, J) = (∩_K T_P(K), ∪_K T_P(K))."""
    pair.check(prog.sig)
    if classify_program(prog).minimalist:
        return ThreeInterpretation(
            _fitting_p(prog, pair.lower, pair.upper),
            _somewhere_p(prog, pair.lower, pair.upper),
        )
    return _enumerated_ultimate_p(prog, pair.lower, pair.upper, gap_cap)


def _somewhere_p(prog: Program, lower: Interpretation, upper: Interpretation) -> Interpretation:
    theta = prog.sig.theta
    return frozenset(
        rule.head for rule in prog.rules if fires_somewhere(rule.body, lower, upper, theta[rule.head])
    )


def _enumerated_ultimate_p(
    prog: Program,
    lower: Interpretation,
    upper: Interpretation,
    gap_cap: int,
) -> ThreeInterpretation:
    guard_cap(len(upper - lower), gap_cap, what="interval gap")
    meet: Interpretation | None = None
    join: Interpretation = frozenset()
    for candidate in subsets_between(lower, upper, prog.universe):
        image = _t_p(prog, candidate)
        meet = image if meet is None else meet & image
        join = join | image
    return ThreeInterpretation(meet or frozenset(), join)


def ultimate_dagger_p(
    prog: Program,
    interpretation: Interpretation,
    *,
    strict: bool = False,
    gap_cap: int = DEFAULT_ENUMERATION_CAP,
) -> Interpretation:
    """U_P†(I): J ↦ U_P(J, I)의 lower 성분의 최소 고정점."""
    prog.sig.check(interpretation)
    if classify_program(prog).minimalist:
        return stable_revision(
            lambda current, bound: _fitting_p(prog, current, bound), interpretation, strict=strict
        )
    return stable_revision(
        lambda current, bound: _enumerated_ultimate_p(prog, current, bound, gap_cap).lower,
        interpretation,
        strict=strict,
        consistent_only=True,
    )


def ultimate_answer_sets_p(
    prog: Program,
    cap: int = DEFAULT_ENUMERATION_CAP,
    gap_cap: int = DEFAULT_ENUMERATION_CAP,
) -> frozenset[Interpretation]:
    """U_P†(I) = I인 해석 전체."""
    return frozenset(
        candidate
        for candidate in supported_models_p(prog, cap)
        if ultimate_dagger_p(prog, candidate, gap_cap=gap_cap) == candidate
    )


def flp_reduct(prog: Program, interpretation: Interpretation) -> Program:
    """P^I = {r ∈ P | I ⊨ b(r)}. 가중치는 보지 않는다."""
    prog.sig.check(interpretation)
    return prog.with_rules(rule for rule in prog.rules if rule.atoms <= interpretation)


def is_flp_answer_set(prog: Program, interpretation: Interpretation) -> bool:
    """I가 P^I의 ⊆-최소 모델인지 판정한다."""
    reduct = flp_reduct(prog, interpretation)
    if not satisfies(interpretation, reduct):
        return False
    return not any(
        subset != interpretation and satisfies(subset, reduct)
        for subset in subsets_of(prog.sig.ordered(interpretation))
    )


def is_answer_set_p(prog: Program, interpretation: Interpretation) -> bool:
    """Φ_P†(I) = I 인지 판정한다."""
    prog.sig.check(interpretation)
    if _t_p(prog, interpretation) != interpretation:
        return False
    return stable_revision(lambda current, bound: _fitting_p(prog, current, bound), interpretation) == interpretation


def flp_answer_sets(prog: Program, cap: int = DEFAULT_ENUMERATION_CAP) -> frozenset[Interpretation]:
    """I가 P^I의 ⊆-최소 모델인 해석 전체."""
    found = frozenset(
        candidate for candidate in all_interpretations(prog.sig, cap) if is_flp_answer_set(prog, candidate)
    )
    logger.debug("FLP answer set 열거 완료: universe=%d, found=%d", len(prog.universe), len(found))
    return found
