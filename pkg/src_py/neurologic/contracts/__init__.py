"""
목적:
- 인터페이스 모델 계층의 공개 심볼을 제공한다.

설명:
- 동치 판정/실험 보고서/JSON 봉투 모델을 하나의 네임스페이스에서 재노출한다.

디자인 패턴:
- 모듈 퍼사드(Module Facade).

참조:
- src_py/neurologic/contracts/equivalence_models.py
- src_py/neurologic/contracts/oracle_models.py
- src_py/neurologic/contracts/report_models.py
"""

from .equivalence_models import (
    EQUIVALENCE_KINDS,
    Counterexample,
    EquivalenceKind,
    EquivalenceVerdict,
    LadderReport,
    PairWitness,
)
from .oracle_models import ExperimentReport, FlpCounterexample, GenParams
from .report_models import SemanticsEnvelope

__all__ = [
    "EQUIVALENCE_KINDS",
    "EquivalenceKind",
    "Counterexample",
    "PairWitness",
    "EquivalenceVerdict",
    "LadderReport",
    "GenParams",
    "FlpCounterexample",
    "ExperimentReport",
    "SemanticsEnvelope",
]
