"""
목적:
- 의미론 결과를 `SemanticsEnvelope` 스키마의 JSON 텍스트로 내보낸다.

설명:
- 해석은 universe 순서의 이름 배열, 해석 집합은 열거 순서의 배열 배열이다.
- 유리수는 항상 "p/q" 문자열, −∞는 "-inf"로 쓴다.

디자인 패턴:
- DTO 매퍼(DTO Mapper).

참조:
- src_py/neurologic/contracts/report_models.py
- src_py/neurologic/cli/main.py
"""

from __future__ import annotations

from collections.abc import Collection, Iterable, Sequence
from typing import Any

from pydantic import BaseModel

from neurologic.contracts.report_models import SemanticsEnvelope
from neurologic.core.numbers import ExtendedRational, format_rational_exact
from neurologic.core.signature import Interpretation, Signature
from neurologic.nets.net import Net
from neurologic.programs.program import Program


def interpretation_json(sig: Signature, interpretation: Collection[str]) -> list[str]:
    return sig.ordered(interpretation)


def family_json(sig: Signature, family: Iterable[Interpretation]) -> list[list[str]]:
    return [sig.ordered(member) for member in sig.sort_family(family)]


def rational_json(value: ExtendedRational) -> str:
    return format_rational_exact(value)


def net_json(net: Net) -> dict[str, Any]:
    """넷 구조 payload. 간선은 (source, target) 이름 사전순."""
    return {
        "theta": {name: rational_json(net.sig.theta[name]) for name in net.universe},
        "edges": [
            {"source": source, "target": target, "weight": rational_json(weight)}
            for (source, target), weight in sorted(net.weights.items())
        ],
    }


def program_json(prog: Program) -> dict[str, Any]:
    """프로그램 구조 payload. 규칙은 정규 순서."""
    return {
        "theta": {name: rational_json(prog.sig.theta[name]) for name in prog.universe},
        "rules": [
            {
                "head": rule.head,
                "body": [{"neuron": name, "weight": rational_json(weight)} for name, weight in rule.body],
            }
            for rule in prog.rules
        ],
    }


def envelope(kind: str, universe: Sequence[str], **payload: Any) -> SemanticsEnvelope:
    """kind/universe 봉투에 payload를 붙인다. pydantic 모델 payload는 dict로 바꾼다."""
    fields = {
        key: value.model_dump(mode="json") if isinstance(value, BaseModel) else value
        for key, value in payload.items()
    }
    return SemanticsEnvelope(kind=kind, universe=list(universe), **fields)


def to_json(kind: str, universe: Sequence[str], **payload: Any) -> str:
    """결정적 JSON 텍스트(들여쓰기 2칸, 키 삽입 순서 유지)."""
    return envelope(kind, universe, **payload).model_dump_json(indent=2)
