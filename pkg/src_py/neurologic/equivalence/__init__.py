"""
목적:
- 동치 판정 계층의 공개 진입점을 제공한다.

디자인 패턴:
- 모듈 퍼사드(Module Facade).

참조:
- src_py/neurologic/equivalence/checker.py
"""

from .checker import (
    OperandView,
    canonical_signature,
    check,
    implication_ladder,
    union_signature,
    verify_counterexample,
)

__all__ = [
    "OperandView",
    "canonical_signature",
    "check",
    "implication_ladder",
    "union_signature",
    "verify_counterexample",
]
