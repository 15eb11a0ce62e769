"""
목적:
- 파싱 진단에 쓰는 소스 위치(span) 타입을 정의한다.

디자인 패턴:
- 값 객체(Value Object).

참조:
- src_py/neurologic/textio/lexer.py
- src_py/neurologic/exceptions.py
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True, slots=True)
class SourceSpan:
    """1부터 시작하는 줄/열 위치와 길이."""

    file: str
    line: int
    column: int
    length: int = 1

    def __str__(self) -> str:
        return f"{self.file}:{self.line}:{self.column}"
