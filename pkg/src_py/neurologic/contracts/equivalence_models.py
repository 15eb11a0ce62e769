"""
목적:
- 동치 판정 결과 인터페이스 모델을 정의한다.

설명:
- 판정이 음성이면 반례(counterexample)를 반드시 함께 담는다.
- 뉴런 집합은 universe 순서의 이름 배열로 직렬화한다.

디자인 패턴:
- DTO(Data Transfer Object).

참조:
- src_py/neurologic/equivalence/checker.py
"""

from __future__ import annotations

from typing import Literal

from pydantic import BaseModel, Field, model_validator

EquivalenceKind = Literal["subsumption", "supported", "least", "answerset", "ultimate"]
EQUIVALENCE_KINDS: tuple[EquivalenceKind, ...] = ("subsumption", "supported", "least", "answerset", "ultimate")


class PairWitness(BaseModel):
    """3-해석 반례 (lower, upper)."""

    lower: list[str]
    upper: list[str]


class Counterexample(BaseModel):
    """두 피연산자가 갈리는 지점.

    subsumption/supported/answerset은 해석 하나, ultimate는 3-해석 하나를 증거로 쓴다.
    left/right는 각 피연산자 쪽 값이다(연산자 상(image), 소속 여부, 최소 모델).
    """

    kind: EquivalenceKind
    interpretation: list[str] | None = Field(default=None)
    pair: PairWitness | None = Field(default=None)
    left: list[list[str]] = Field(default_factory=list)
    right: list[list[str]] = Field(default_factory=list)
    note: str = Field(default="")


class EquivalenceVerdict(BaseModel):
    """동치 판정 모델."""

    kind: EquivalenceKind
    equivalent: bool
    universe: list[str]
    counterexample: Counterexample | None = Field(default=None)

    @model_validator(mode="after")
    def validate_witness(self) -> EquivalenceVerdict:
        if not self.equivalent and self.counterexample is None:
            raise ValueError("비동치 판정에는 counterexample이 있어야 합니다")
        return self


class LadderReport(BaseModel):
    """다섯 가지 동치 개념을 한 번에 판정한 보고서."""

    verdicts: dict[str, EquivalenceVerdict] = Field(default_factory=dict)
    skipped: dict[str, str] = Field(default_factory=dict)
    implications_hold: bool = Field(default=True)
