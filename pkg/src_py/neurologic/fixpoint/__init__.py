"""
목적:
- 고정점 계산 계층의 공개 진입점을 제공한다.

디자인 패턴:
- 모듈 퍼사드(Module Facade).

참조:
- src_py/neurologic/fixpoint/kleene.py
"""

from .kleene import IterationTrace, Operator, all_fixed_points, iterate, lfp, stable_revision

__all__ = ["IterationTrace", "Operator", "lfp", "iterate", "all_fixed_points", "stable_revision"]
