"""
목적:
- 유한 멱집합 격자 위의 일반 고정점 계산을 제공한다.

설명:
- `lfp`는 ∅에서 시작하는 Kleene 반복으로 단조 연산자의 최소 고정점을 구한다.
- `iterate`는 단계 예산 안에서 연산자를 적용하며 모든 단계를 기록한다.
- `all_fixed_points`는 전수 열거로 고정점 전체를 찾는다.
- 수렴은 연속한 두 반복값의 비교로만 판정한다.

디자인 패턴:
- 함수형 유틸 모듈(Function Utility Module).

참조:
- src_py/neurologic/nets/semantics.py
- src_py/neurologic/programs/semantics.py
"""

from __future__ import annotations

import logging
from collections.abc import Callable
from dataclasses import dataclass

import numpy as np

from neurologic.config.models import DEFAULT_ENUMERATION_CAP
from neurologic.core.signature import Interpretation, Signature, all_interpretations
from neurologic.exceptions import (
    ConfigurationError,
    IterationEscapedSublatticeError,
    NonMonotoneDetectedError,
)

logger = logging.getLogger(__name__)

type Operator = Callable[[Interpretation], Interpretation]

_EMPTY: Interpretation = frozenset()


@dataclass(frozen=True, slots=True)
class IterationTrace:
    """반복 적용 기록. steps[0]은 시작값이다."""

    steps: tuple[Interpretation, ...]
    converged: bool

    @property
    def last(self) -> Interpretation:
        return self.steps[-1]


def lfp(
    op: Operator,
    sig: Signature | None = None,
    *,
    require_monotone_hint: bool = False,
    probe_count: int = 64,
    seed: int = 0,
) -> Interpretation:
    """∅, op(∅), op(op(∅)), …의 첫 반복값(최소 고정점)을 반환한다."""
    if require_monotone_hint and sig is not None:
        _probe_monotone(op, sig, probe_count=probe_count, seed=seed)

    current = _EMPTY
    steps = 0
    while True:
        following = op(current)
        steps += 1
        if following == current:
            logger.debug("lfp 수렴: steps=%d, size=%d", steps, len(current))
            return current
        if not current <= following:
            raise NonMonotoneDetectedError(
                f"Kleene 체인이 {steps}번째 단계에서 줄어들었습니다: "
                f"lost={sorted(current - following)}"
            )
        current = following


def iterate(op: Operator, start: Interpretation, max_steps: int) -> IterationTrace:
    """op를 최대 max_steps번 적용하고, 직전 값이 반복되면 멈춘다."""
    if max_steps < 0:
        raise ConfigurationError("max_steps는 0 이상이어야 합니다")

    steps = [start]
    for _ in range(max_steps):
        following = op(steps[-1])
        steps.append(following)
        if following == steps[-2]:
            return IterationTrace(steps=tuple(steps), converged=True)
    return IterationTrace(steps=tuple(steps), converged=False)


def all_fixed_points(
    op: Operator,
    sig: Signature,
    cap: int = DEFAULT_ENUMERATION_CAP,
) -> frozenset[Interpretation]:
    """op(I) = I인 해석 전체를 전수 열거로 찾는다."""
    return frozenset(candidate for candidate in all_interpretations(sig, cap) if op(candidate) == candidate)


def _probe_monotone(op: Operator, sig: Signature, *, probe_count: int, seed: int) -> None:
    rng = np.random.default_rng(seed)
    size = len(sig)
    for _ in range(probe_count):
        upper_mask = rng.random(size) < 0.5
        lower_mask = upper_mask & (rng.random(size) < 0.5)
        lower = frozenset(name for name, keep in zip(sig.universe, lower_mask, strict=True) if keep)
        upper = frozenset(name for name, keep in zip(sig.universe, upper_mask, strict=True) if keep)
        if not op(lower) <= op(upper):
            raise NonMonotoneDetectedError(
                f"단조성 위반: I={sig.format(lower)} ⊆ J={sig.format(upper)} 이지만 op(I) ⊄ op(J)"
            )


def stable_revision(
    revise: Callable[[Interpretation, Interpretation], Interpretation],
    bound: Interpretation,
    *,
    strict: bool = False,
    consistent_only: bool = False,
) -> Interpretation:
    """J ↦ revise(J, bound)의 최소 고정점(안정 수정)을 ∅에서부터 계산한다.

    반복값이 [∅, bound]를 벗어나는 것은 bound가 모델이 아닐 때뿐이다.
    strict이면 그 시점에 예외를 던지고, consistent_only이면 벗어난 반복값을 그대로
    돌려준다(revise가 일관된 쌍에서만 정의된 경우). 둘 다 아니면 전체 격자에서 계속 반복한다.
    """
    if consistent_only:
        current: Interpretation = _EMPTY
        while True:
            following = revise(current, bound)
            if following == current:
                return current
            if not following <= bound:
                if strict:
                    raise IterationEscapedSublatticeError(
                        f"안정 수정 반복이 [∅, I]를 벗어났습니다: outside={sorted(following - bound)}"
                    )
                return following
            current = following

    escaped = False

    def step(current: Interpretation) -> Interpretation:
        nonlocal escaped
        following = revise(current, bound)
        if not escaped and not following <= bound:
            escaped = True
            if strict:
                raise IterationEscapedSublatticeError(
                    f"안정 수정 반복이 [∅, I]를 벗어났습니다: outside={sorted(following - bound)}"
                )
            logger.debug("안정 수정 반복이 [∅, I]를 벗어남: outside=%s", sorted(following - bound))
        return following

    return lfp(step)
