"""
목적:
- 뉴런/규칙의 발화 조건(가중합 ≥ θ)과 구간 최솟값/최댓값 계산을 제공한다.

설명:
- 넷의 뉴런 body와 프로그램 규칙 body는 모두 (뉴런, 가중치) 열이므로 같은 함수를 공유한다.
- 구간 [lower, upper]의 모든 K에 대한 가중합 최솟값은 양의 가중치는 lower, 음의 가중치는
  upper에서 읽어 얻는다(최댓값은 반대). 각 항이 K(b)에 대해 선형 단조이기 때문이다.
- lower ⊄ upper인 쌍에서도 같은 식을 쓴다. 안정 수정(stable revision)을 전체 격자에서
  계산할 때 필요하다.

디자인 패턴:
- 함수형 유틸 모듈(Function Utility Module).

참조:
- src_py/neurologic/nets/semantics.py
- src_py/neurologic/programs/semantics.py
- src_py/neurologic/oracle/brute.py
"""

from __future__ import annotations

from collections.abc import Collection, Sequence
from fractions import Fraction

from neurologic.core.numbers import NEG_INFINITY, ExtendedRational, ext_ge, weighted_sum

type WeightedBody = Sequence[tuple[str, Fraction]]


def body_sum(terms: WeightedBody, active: Collection[str]) -> ExtendedRational:
    """해석 하나에서의 가중합. 빈 body는 −∞."""
    return weighted_sum((weight, name in active) for name, weight in terms)


def interval_min_sum(terms: WeightedBody, lower: Collection[str], upper: Collection[str]) -> ExtendedRational:
    """구간 [lower, upper] 위 가중합의 최솟값."""
    if not terms:
        return NEG_INFINITY
    total = Fraction(0)
    for name, weight in terms:
        if (weight > 0 and name in lower) or (weight < 0 and name in upper):
            total += weight
    return total


def interval_max_sum(terms: WeightedBody, lower: Collection[str], upper: Collection[str]) -> ExtendedRational:
    """구간 [lower, upper] 위 가중합의 최댓값."""
    if not terms:
        return NEG_INFINITY
    total = Fraction(0)
    for name, weight in terms:
        if (weight > 0 and name in upper) or (weight < 0 and name in lower):
            total += weight
    return total


def fires(terms: WeightedBody, active: Collection[str], threshold: ExtendedRational) -> bool:
    return ext_ge(body_sum(terms, active), threshold)


def fires_throughout(
    terms: WeightedBody,
    lower: Collection[str],
    upper: Collection[str],
    threshold: ExtendedRational,
) -> bool:
    """구간의 모든 K에서 발화하는지 판정한다."""
    return ext_ge(interval_min_sum(terms, lower, upper), threshold)


def fires_somewhere(
    terms: WeightedBody,
    lower: Collection[str],
    upper: Collection[str],
    threshold: ExtendedRational,
) -> bool:
    """구간의 어떤 K에서 발화하는지 판정한다."""
    return ext_ge(interval_max_sum(terms, lower, upper), threshold)
