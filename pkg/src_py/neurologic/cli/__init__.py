"""
목적:
- 명령행 인터페이스 패키지.

참조:
- src_py/neurologic/cli/main.py
"""

from .main import build_parser, main, run

__all__ = ["build_parser", "main", "run"]
