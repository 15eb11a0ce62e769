"""
목적:
- 넷 ↔ 프로그램 번역 계층의 공개 진입점을 제공한다.

디자인 패턴:
- 모듈 퍼사드(Module Facade).

참조:
- src_py/neurologic/translate/passes.py
"""

from .passes import net_to_program, ordinary_net_to_ordinary_program, program_to_net

__all__ = ["net_to_program", "ordinary_net_to_ordinary_program", "program_to_net"]
