"""
목적:
- 임계값과 가중합의 값 영역인 확장 유리수(ℚ ∪ {−∞})를 제공한다.

설명:
- 유한 값은 `fractions.Fraction`(기약분수, 양의 분모)으로 정확하게 표현한다.
- −∞는 부동소수 센티널이 아닌 별도 싱글턴 타입 `NegInfinity`로 표현한다.
- 빈 합은 −∞로 정의하며, 이 규약 덕분에 fact는 항상 발화한다.

디자인 패턴:
- 값 객체(Value Object) + 싱글턴(Singleton).

참조:
- src_py/neurologic/nets/semantics.py
- src_py/neurologic/programs/semantics.py
"""

from __future__ import annotations

from collections.abc import Iterable
from fractions import Fraction
from functools import total_ordering
from typing import Final


@total_ordering
class NegInfinity:
    """모든 유한 유리수보다 작은 −∞ 값."""

    _instance: NegInfinity | None = None
    __slots__ = ()

    def __new__(cls) -> NegInfinity:
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __eq__(self, other: object) -> bool:
        return isinstance(other, NegInfinity)

    def __lt__(self, other: object) -> bool:
        if isinstance(other, NegInfinity):
            return False
        if isinstance(other, (Fraction, int)):
            return True
        return NotImplemented

    def __hash__(self) -> int:
        return hash("-inf")

    def __repr__(self) -> str:
        return "NEG_INFINITY"

    def __str__(self) -> str:
        return "-inf"


NEG_INFINITY: Final = NegInfinity()

type ExtendedRational = Fraction | NegInfinity


def ext_ge(x: ExtendedRational, y: ExtendedRational) -> bool:
    """전순서 기준 x ≥ y를 판정한다. −∞ ≥ −∞는 참이다."""
    if isinstance(y, NegInfinity):
        return True
    if isinstance(x, NegInfinity):
        return False
    return x >= y


def weighted_sum(terms: Iterable[tuple[Fraction, bool]]) -> ExtendedRational:
    """(가중치, 활성 여부) 항들의 정확한 가중합. 빈 항 목록은 −∞."""
    total = Fraction(0)
    empty = True
    for weight, active in terms:
        empty = False
        if active:
            total += weight
    if empty:
        return NEG_INFINITY
    return total


def parse_rational(text: str) -> Fraction:
    """`-3`, `1/2`, `0.25` 형식 리터럴을 정확한 유리수로 변환한다."""
    return Fraction(text.strip())


def format_rational(value: ExtendedRational) -> str:
    """DSL용 표기. 정수는 분모 없이, −∞는 `-inf`로 쓴다."""
    if isinstance(value, NegInfinity):
        return "-inf"
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def format_rational_exact(value: ExtendedRational) -> str:
    """JSON용 표기. 항상 `p/q` 형식을 쓴다."""
    if isinstance(value, NegInfinity):
        return "-inf"
    return f"{value.numerator}/{value.denominator}"
