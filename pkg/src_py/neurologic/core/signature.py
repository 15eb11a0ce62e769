"""
목적:
- 뉴런 시그니처, 해석(interpretation), 3-해석과 그 열거 연산을 정의한다.

설명:
- 해석은 universe의 부분집합(`frozenset[str]`)이며 0/1 valuation으로도 읽는다.
- 열거 순서는 universe 선언 순서 기준 이진 카운팅이며, `Signature.rank`가 그 순번이다.
- 열거 연산은 universe 크기가 상한을 넘으면 `CapExceededError`로 즉시 실패한다.

디자인 패턴:
- 값 객체(Value Object).

참조:
- src_py/neurologic/core/numbers.py
- src_py/neurologic/fixpoint/kleene.py
"""

from __future__ import annotations

import re
from collections.abc import Collection, Iterable, Iterator, Mapping, Sequence
from dataclasses import dataclass, field
from itertools import product
from types import MappingProxyType

from neurologic.config.models import DEFAULT_ENUMERATION_CAP
from neurologic.core.numbers import ExtendedRational, NegInfinity
from neurologic.exceptions import (
    CapExceededError,
    SignatureMismatchError,
    UnknownNeuronError,
    ValidationError,
)

type NeuronId = str
type Interpretation = frozenset[NeuronId]

_NEURON_ID_PATTERN = re.compile(r"[A-Za-z][A-Za-z0-9_]*")


def validate_neuron_id(name: str) -> NeuronId:
    """뉴런 이름 토큰 규칙(문자로 시작, 문자/숫자/밑줄)을 검사한다."""
    if not _NEURON_ID_PATTERN.fullmatch(name):
        raise ValidationError(f"유효하지 않은 뉴런 이름입니다: {name!r}")
    return name


@dataclass(frozen=True, slots=True)
class Signature:
    """순서 있는 뉴런 universe와 뉴런별 임계값 θ."""

    universe: tuple[NeuronId, ...]
    theta: Mapping[NeuronId, ExtendedRational]
    _index: Mapping[NeuronId, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        universe = tuple(validate_neuron_id(name) for name in self.universe)
        index = {name: position for position, name in enumerate(universe)}
        if len(index) != len(universe):
            raise ValidationError(f"universe에 중복 뉴런이 있습니다: {list(universe)}")
        missing = [name for name in universe if name not in self.theta]
        if missing:
            raise ValidationError(f"임계값이 없는 뉴런이 있습니다: {missing}")
        extra = sorted(set(self.theta) - set(index))
        if extra:
            raise UnknownNeuronError(f"universe 밖 뉴런에 임계값이 지정되었습니다: {extra}")
        object.__setattr__(self, "universe", universe)
        object.__setattr__(self, "theta", MappingProxyType({name: self.theta[name] for name in universe}))
        object.__setattr__(self, "_index", MappingProxyType(index))

    def __contains__(self, name: object) -> bool:
        return name in self._index

    def __len__(self) -> int:
        return len(self.universe)

    def index(self, name: NeuronId) -> int:
        """universe 내 위치를 반환한다."""
        try:
            return self._index[name]
        except KeyError:
            raise UnknownNeuronError(f"universe에 없는 뉴런입니다: {name!r}") from None

    def is_fact_threshold(self, name: NeuronId) -> bool:
        return isinstance(self.theta[name], NegInfinity)

    def interpretation(self, members: Iterable[NeuronId]) -> Interpretation:
        """멤버 목록을 검증해 해석으로 만든다."""
        result = frozenset(members)
        self.check(result)
        return result

    def check(self, interpretation: Collection[NeuronId]) -> None:
        """해석이 universe의 부분집합인지 확인한다."""
        outside = [name for name in interpretation if name not in self._index]
        if outside:
            raise SignatureMismatchError(f"universe 밖 뉴런이 해석에 포함되었습니다: {sorted(outside)}")

    def ordered(self, interpretation: Collection[NeuronId]) -> list[NeuronId]:
        """해석을 universe 순서의 이름 목록으로 반환한다."""
        return [name for name in self.universe if name in interpretation]

    def rank(self, interpretation: Collection[NeuronId]) -> int:
        """이진 카운팅 열거 순번. 첫 뉴런이 최하위 비트다."""
        return sum(1 << self._index[name] for name in interpretation)

    def sort_family(self, family: Iterable[Interpretation]) -> list[Interpretation]:
        """해석 집합을 열거 순서로 정렬한다."""
        return sorted(set(family), key=self.rank)

    def format(self, interpretation: Collection[NeuronId]) -> str:
        """`{a, b}` 형식 문자열."""
        return "{" + ", ".join(self.ordered(interpretation)) + "}"


@dataclass(frozen=True, slots=True)
class ThreeInterpretation:
    """3-해석 (I, J), I ⊆ J. lower는 참, upper − lower는 미정, upper 밖은 거짓."""

    lower: Interpretation
    upper: Interpretation

    def __post_init__(self) -> None:
        object.__setattr__(self, "lower", frozenset(self.lower))
        object.__setattr__(self, "upper", frozenset(self.upper))
        if not self.lower <= self.upper:
            raise ValidationError(
                f"3-해석은 lower ⊆ upper 이어야 합니다: lower={sorted(self.lower)}, upper={sorted(self.upper)}"
            )

    @classmethod
    def exact(cls, interpretation: Interpretation) -> ThreeInterpretation:
        return cls(interpretation, interpretation)

    @property
    def gap(self) -> Interpretation:
        return self.upper - self.lower

    def check(self, sig: Signature) -> None:
        sig.check(self.upper)


def precision_leq(
    p: ThreeInterpretation,
    q: ThreeInterpretation,
    sig: Signature | None = None,
) -> bool:
    """정밀도 순서 p ≤_p q, 즉 p.lower ⊆ q.lower ⊆ q.upper ⊆ p.upper."""
    if sig is not None:
        p.check(sig)
        q.check(sig)
    return p.lower <= q.lower and q.upper <= p.upper


def guard_cap(size: int, cap: int, what: str = "universe") -> None:
    """열거 크기가 상한 이내인지 검사한다."""
    if size > cap:
        raise CapExceededError(f"{what} 크기 {size}가 열거 상한 {cap}을 초과합니다")


def subsets_of(members: Sequence[NeuronId]) -> Iterator[Interpretation]:
    """주어진 순서 기준 이진 카운팅으로 모든 부분집합을 생성한다."""
    for mask in range(1 << len(members)):
        yield frozenset(name for bit, name in enumerate(members) if mask >> bit & 1)


def all_interpretations(sig: Signature, cap: int = DEFAULT_ENUMERATION_CAP) -> Iterator[Interpretation]:
    """시그니처 위의 2^n개 해석을 ∅부터 전체 집합까지 결정적으로 열거한다."""
    guard_cap(len(sig), cap)
    return subsets_of(sig.universe)


def subsets_between(
    lower: Interpretation,
    upper: Interpretation,
    order: Sequence[NeuronId] | None = None,
) -> Iterator[Interpretation]:
    """구간 [lower, upper]의 모든 K를 열거한다."""
    gap = [name for name in (order or sorted(upper)) if name in upper and name not in lower]
    for extra in subsets_of(gap):
        yield lower | extra


def all_three_interpretations(
    sig: Signature,
    cap: int = DEFAULT_ENUMERATION_CAP,
) -> Iterator[ThreeInterpretation]:
    """3^n개의 3-해석을 뉴런별 (거짓, 미정, 참) 순서로 열거한다."""
    guard_cap(len(sig), cap)
    for states in product((0, 1, 2), repeat=len(sig)):
        lower = frozenset(name for name, state in zip(sig.universe, states, strict=True) if state == 2)
        upper = frozenset(name for name, state in zip(sig.universe, states, strict=True) if state >= 1)
        yield ThreeInterpretation(lower, upper)
