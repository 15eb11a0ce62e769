"""
목적:
- 구간 열거로 정의를 글자 그대로 구현한 기준(reference) 연산자를 제공한다.

설명:
- Φ와 ultimate 연산자를 [lower, upper]의 모든 K에 대해 T를 평가해 계산한다.
- 빠른 구간 공식 구현(nets.semantics, programs.semantics)의 정답지로 테스트에서만 대조한다.
- 구간 간격 |upper − lower|가 상한을 넘으면 CapExceededError.

디자인 패턴:
- 테스트 오라클(Test Oracle).

참조:
- src_py/neurologic/nets/semantics.py
- src_py/neurologic/programs/semantics.py
"""

from __future__ import annotations

from collections.abc import Callable, Iterator, Sequence

from neurologic.config.models import DEFAULT_ENUMERATION_CAP
from neurologic.core.firing import fires
from neurologic.core.signature import Interpretation, ThreeInterpretation, guard_cap, subsets_between
from neurologic.nets.net import Net
from neurologic.nets.semantics import t_n
from neurologic.programs.program import Program
from neurologic.programs.semantics import t_p


def _interval(pair: ThreeInterpretation, order: Sequence[str], gap_cap: int) -> Iterator[Interpretation]:
    guard_cap(len(pair.gap), gap_cap, what="interval gap")
    return subsets_between(pair.lower, pair.upper, order)


def _meet_join(
    images: Callable[[Interpretation], Interpretation],
    pair: ThreeInterpretation,
    order: Sequence[str],
    gap_cap: int,
) -> ThreeInterpretation:
    meet: Interpretation | None = None
    join: Interpretation = frozenset()
    for candidate in _interval(pair, order, gap_cap):
        image = images(candidate)
        meet = image if meet is None else meet & image
        join |= image
    return ThreeInterpretation(meet if meet is not None else frozenset(), join)


def brute_fitting(net: Net, pair: ThreeInterpretation, gap_cap: int = DEFAULT_ENUMERATION_CAP) -> Interpretation:
    """∩_{lower ⊆ K ⊆ upper} T_N(K)."""
    pair.check(net.sig)
    return _meet_join(lambda candidate: t_n(net, candidate), pair, net.universe, gap_cap).lower


def brute_ultimate(net: Net, pair: ThreeInterpretation, gap_cap: int = DEFAULT_ENUMERATION_CAP) -> ThreeInterpretation:
    """(∩_K T_N(K), ∪_K T_N(K))."""
    pair.check(net.sig)
    return _meet_join(lambda candidate: t_n(net, candidate), pair, net.universe, gap_cap)


def brute_ultimate_p(
    prog: Program,
    pair: ThreeInterpretation,
    gap_cap: int = DEFAULT_ENUMERATION_CAP,
) -> ThreeInterpretation:
    """(∩_K T_P(K), ∪_K T_P(K))."""
    pair.check(prog.sig)
    return _meet_join(lambda candidate: t_p(prog, candidate), pair, prog.universe, gap_cap)


def brute_fitting_p(prog: Program, pair: ThreeInterpretation, gap_cap: int = DEFAULT_ENUMERATION_CAP) -> Interpretation:
    """어떤 규칙 r이 구간의 모든 K에서 발화하는 헤드 h(r)의 집합."""
    pair.check(prog.sig)
    candidates = list(_interval(pair, prog.universe, gap_cap))
    theta = prog.sig.theta
    return frozenset(
        rule.head
        for rule in prog.rules
        if all(fires(rule.body, candidate, theta[rule.head]) for candidate in candidates)
    )
