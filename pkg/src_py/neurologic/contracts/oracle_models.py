"""
목적:
- 무작위 인스턴스 생성 파라미터와 FLP/AFT 실험 보고서 모델을 정의한다.

설명:
- 생성 파라미터는 범위/비율 교차 검증을 필드 검증기로 수행한다.
- 실험 보고서는 (params, seed, instance_count)로 재현 가능하며,
  반례는 CLI로 다시 돌려볼 수 있도록 `.nlp` 텍스트로 담는다.

디자인 패턴:
- DTO(Data Transfer Object) + 값 객체(Value Object).

참조:
- src_py/neurologic/oracle/generator.py
- src_py/neurologic/oracle/experiment.py
"""

from __future__ import annotations

from pydantic import BaseModel, ConfigDict, Field, field_validator


class GenParams(BaseModel):
    """무작위 넷/프로그램 생성 파라미터."""

    model_config = ConfigDict(frozen=True)

    min_neurons: int = Field(default=1, ge=0)
    max_neurons: int = Field(default=6, ge=0)
    edge_density: float = Field(default=0.4, ge=0.0, le=1.0)
    negative_weight_fraction: float = Field(default=0.3, ge=0.0, le=1.0)
    min_facts: int = Field(default=0, ge=0)
    max_facts: int = Field(default=2, ge=0)
    max_numerator: int = Field(default=3, ge=1)
    max_denominator: int = Field(default=2, ge=1)
    max_rules_per_head: int = Field(default=2, ge=1)
    acyclic: bool = Field(default=False)
    ordinary: bool = Field(default=False)
    positive_thresholds: bool = Field(default=False)
    seed: int = Field(default=0, ge=0)

    @field_validator("max_neurons")
    @classmethod
    def validate_neuron_range(cls, value: int, info) -> int:
        min_neurons = info.data.get("min_neurons", 1)
        if value < min_neurons:
            raise ValueError("max_neurons는 min_neurons 이상이어야 합니다")
        return value

    @field_validator("max_facts")
    @classmethod
    def validate_fact_range(cls, value: int, info) -> int:
        min_facts = info.data.get("min_facts", 0)
        if value < min_facts:
            raise ValueError("max_facts는 min_facts 이상이어야 합니다")
        return value


class FlpCounterexample(BaseModel):
    """AFT/FLP 두 의미론이 갈린 프로그램과 증거 해석."""

    instance: int = Field(ge=0)
    program_text: str
    witness: list[str]
    direction: str = Field(default="aft-not-flp")


class ExperimentReport(BaseModel):
    """AFT answer set이 FLP answer set에 포함되는지 측정한 보고서."""

    params: GenParams
    instance_count: int = Field(ge=0)
    instances_run: int = Field(default=0, ge=0)
    aft_subset_flp: int = Field(default=0, ge=0)
    flp_subset_aft: int = Field(default=0, ge=0)
    aft_answer_sets_total: int = Field(default=0, ge=0)
    flp_answer_sets_total: int = Field(default=0, ge=0)
    counterexamples: list[FlpCounterexample] = Field(default_factory=list)
    converse_counterexamples: list[FlpCounterexample] = Field(default_factory=list)
