"""
목적:
- CLI `--json` 출력의 공통 봉투(envelope) 모델을 정의한다.

설명:
- 모든 출력은 "kind", "universe"를 가지며, 나머지 필드는 kind별 payload로 덧붙는다.
- 유리수는 정확성을 위해 "p/q" 문자열로, −∞는 "-inf"로 쓴다.

디자인 패턴:
- DTO(Data Transfer Object).

참조:
- src_py/neurologic/textio/json_export.py
"""

from __future__ import annotations

from pydantic import BaseModel, ConfigDict, Field


class SemanticsEnvelope(BaseModel):
    """kind + universe + 임의 payload."""

    model_config = ConfigDict(extra="allow")

    kind: str = Field(min_length=1)
    universe: list[str] = Field(default_factory=list)
