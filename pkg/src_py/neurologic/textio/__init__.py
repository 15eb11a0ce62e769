"""
목적:
- 텍스트 입출력 계층(DSL 파서, 직렬화, JSON 내보내기)의 공개 진입점을 제공한다.

디자인 패턴:
- 모듈 퍼사드(Module Facade).

참조:
- src_py/neurologic/textio/parser.py
- src_py/neurologic/textio/serializer.py
- src_py/neurologic/textio/json_export.py
"""

from .json_export import (
    envelope,
    family_json,
    interpretation_json,
    net_json,
    program_json,
    rational_json,
    to_json,
)
from .lexer import Token, TokenKind, tokenize
from .parser import parse_net, parse_program
from .serializer import format_rule, serialize_net, serialize_program
from .spans import SourceSpan

__all__ = [
    "SourceSpan",
    "Token",
    "TokenKind",
    "envelope",
    "family_json",
    "format_rule",
    "interpretation_json",
    "net_json",
    "parse_net",
    "parse_program",
    "program_json",
    "rational_json",
    "serialize_net",
    "serialize_program",
    "to_json",
    "tokenize",
]
