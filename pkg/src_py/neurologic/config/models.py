"""
목적:
- neurologic 라이브러리의 설정 인터페이스를 정의한다.

설명:
- 열거 상한, 0 가중치 허용 여부, universe 엄격 모드 등 연산 제어 값을 단일 모델로 관리한다.
- 라이브러리는 환경 변수를 직접 읽지 않고, CLI 드라이버가 만든 설정 객체를 주입받는다.

디자인 패턴:
- 값 객체(Value Object).

참조:
- src_py/neurologic/cli/main.py
- src_py/neurologic/equivalence/checker.py
"""

from __future__ import annotations

from pydantic import BaseModel, ConfigDict, Field

DEFAULT_ENUMERATION_CAP = 20


class SemanticsConfig(BaseModel):
    """의미론 연산 설정 모델."""

    model_config = ConfigDict(frozen=True)

    enumeration_cap: int = Field(default=DEFAULT_ENUMERATION_CAP, ge=0, le=30)
    brute_force_gap_cap: int = Field(default=20, ge=0, le=30)
    permit_zero_weights: bool = Field(default=False)
    strict_universe: bool = Field(default=False)
    monotone_probe_count: int = Field(default=64, ge=0)
    experiment_max_neurons: int = Field(default=8, ge=1, le=8)


def default_config() -> SemanticsConfig:
    """기본 설정 객체를 생성한다."""
    return SemanticsConfig()
