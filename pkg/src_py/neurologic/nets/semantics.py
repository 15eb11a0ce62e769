"""
목적:
- 넷의 의미론 연산(T_N, 최소 모델, Fitting 연산자, AFT answer set, ultimate 의미론)을 제공한다.

설명:
- `t_n`은 즉시 귀결 연산자다. fact는 빈 합 −∞ ≥ −∞로 항상 발화하므로 T_N(∅) = facts(N)이다.
- `fitting`과 `ultimate`는 ∀K 열거 대신 구간 최솟값/최댓값 공식을 쓴다.
  열거 기반 기준 구현은 oracle 모듈에 있고 테스트에서 서로 대조한다.
- answer set 후보는 지지 모델(supported model)로 한정해도 전수 열거와 결과가 같다.
  Φ†(I) = I이면 Φ(I, I) = T_N(I) = I이기 때문이다.

디자인 패턴:
- 함수형 서비스 모듈(Functional Service Module).

참조:
- src_py/neurologic/core/firing.py
- src_py/neurologic/fixpoint/kleene.py
- src_py/neurologic/oracle/brute.py
"""

from __future__ import annotations

import logging

from neurologic.config.models import DEFAULT_ENUMERATION_CAP
from neurologic.core.firing import fires, fires_somewhere, fires_throughout
from neurologic.core.signature import Interpretation, ThreeInterpretation, all_interpretations
from neurologic.exceptions import NotPositiveError
from neurologic.fixpoint.kleene import all_fixed_points, lfp, stable_revision
from neurologic.nets.net import Net, classify

logger = logging.getLogger(__name__)


def t_n(net: Net, interpretation: Interpretation) -> Interpretation:
    """T_N(I) = {a | Σ_{b ∈ b_N(a)} w_ba·I(b) ≥ θ(a)}."""
    net.sig.check(interpretation)
    return _t_n(net, interpretation)


def _t_n(net: Net, interpretation: Interpretation) -> Interpretation:
    theta = net.sig.theta
    return frozenset(
        name for name in net.universe if fires(net.incoming(name), interpretation, theta[name])
    )


def least_model(net: Net, probe_count: int = 0) -> Interpretation:
    """양의 넷의 최소 모델 T_N^∞. probe_count > 0이면 반복 전에 단조성을 표본 검사한다."""
    if not classify(net).positive:
        raise NotPositiveError("net is not positive: 음수 가중치가 있어 최소 모델이 정의되지 않습니다")
    return lfp(
        lambda current: _t_n(net, current),
        net.sig,
        require_monotone_hint=probe_count > 0,
        probe_count=probe_count,
    )


def models(net: Net, cap: int = DEFAULT_ENUMERATION_CAP) -> frozenset[Interpretation]:
    """T_N의 prefixed point 전체."""
    return frozenset(
        candidate for candidate in all_interpretations(net.sig, cap) if _t_n(net, candidate) <= candidate
    )


def supported_models(net: Net, cap: int = DEFAULT_ENUMERATION_CAP) -> frozenset[Interpretation]:
    """T_N의 고정점 전체."""
    return all_fixed_points(lambda current: _t_n(net, current), net.sig, cap)


def fitting(net: Net, pair: ThreeInterpretation) -> Interpretation:
    """Φ_N(I, J): 구간 [I, J]의 모든 K에서 발화하는 뉴런 집합."""
    pair.check(net.sig)
    return _fitting(net, pair.lower, pair.upper)


def _fitting(net: Net, lower: Interpretation, upper: Interpretation) -> Interpretation:
    theta = net.sig.theta
    return frozenset(
        name for name in net.universe if fires_throughout(net.incoming(name), lower, upper, theta[name])
    )


def _ultimate_upper(net: Net, lower: Interpretation, upper: Interpretation) -> Interpretation:
    theta = net.sig.theta
    return frozenset(
        name for name in net.universe if fires_somewhere(net.incoming(name), lower, upper, theta[name])
    )


def phi_dagger(net: Net, interpretation: Interpretation, *, strict: bool = False) -> Interpretation:
    """Φ_N†(I) = lfp(Φ_N(•, I))."""
    net.sig.check(interpretation)
    return stable_revision(lambda current, bound: _fitting(net, current, bound), interpretation, strict=strict)


def answer_sets(net: Net, cap: int = DEFAULT_ENUMERATION_CAP) -> frozenset[Interpretation]:
    """Φ_N†(I) = I인 해석 전체."""
    found = frozenset(
        candidate
        for candidate in supported_models(net, cap)
        if stable_revision(lambda current, bound: _fitting(net, current, bound), candidate) == candidate
    )
    logger.debug("answer set 열거 완료: universe=%d, found=%d", len(net.universe), len(found))
    return found


def ultimate(net: Net, pair: ThreeInterpretation) -> ThreeInterpretation:
    """U_N(I, J) = (∩_K T_N(K), ∪_K T_N(K)). 넷에서는 lower 성분이 Φ_N(I, J)와 같다."""
    pair.check(net.sig)
    return ThreeInterpretation(
        _fitting(net, pair.lower, pair.upper),
        _ultimate_upper(net, pair.lower, pair.upper),
    )


def ultimate_dagger(net: Net, interpretation: Interpretation, *, strict: bool = False) -> Interpretation:
    """U_N†(I): J ↦ U_N(J, I)의 lower 성분의 최소 고정점."""
    net.sig.check(interpretation)
    return stable_revision(
        lambda current, bound: ultimate_lower(net, current, bound), interpretation, strict=strict
    )


def ultimate_lower(net: Net, lower: Interpretation, upper: Interpretation) -> Interpretation:
    """∩_{lower ⊆ K ⊆ upper} T_N(K)."""
    return _fitting(net, lower, upper)


def ultimate_answer_sets(net: Net, cap: int = DEFAULT_ENUMERATION_CAP) -> frozenset[Interpretation]:
    """U_N†(I) = I인 해석 전체."""
    return frozenset(
        candidate
        for candidate in supported_models(net, cap)
        if stable_revision(lambda current, bound: ultimate_lower(net, current, bound), candidate) == candidate
    )
