"""
목적:
- `.nlp`/`.nnet` 텍스트를 토큰 열로 나눈다.

설명:
- 하나의 정규식 테이블로 두 형식을 모두 토큰화한다. 키워드(theta, node, edge, fact)는
  식별자로 내보내고 파서가 문맥으로 구분한다.
- 주석은 `%`부터 줄 끝까지다. CRLF는 LF로 취급한다.
- 유리수 리터럴은 `-`? 숫자 (`/` 숫자 | `.` 숫자)? 이다. `1.` 은 정수 1과 문장 끝 `.` 으로 읽힌다.

디자인 패턴:
- 테이블 기반 렉서(Table-driven Lexer).

참조:
- src_py/neurologic/textio/parser.py
- src_py/neurologic/textio/spans.py
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum, auto

from neurologic.exceptions import ParseError
from neurologic.textio.spans import SourceSpan


class TokenKind(Enum):
    IDENT = auto()
    RATIONAL = auto()
    RULE_ARROW = auto()
    EDGE_ARROW = auto()
    COLON = auto()
    COMMA = auto()
    DOT = auto()
    EQUALS = auto()
    EOF = auto()


@dataclass(frozen=True, slots=True)
class Token:
    kind: TokenKind
    text: str
    span: SourceSpan


_TOKEN_PATTERN = re.compile(
    r"""
    (?P<NEWLINE>\r?\n)
    | (?P<SKIP>[ \t\r\f\v]+|%[^\r\n]*)
    | (?P<RULE_ARROW><-)
    | (?P<EDGE_ARROW>->)
    | (?P<RATIONAL>-?[0-9]+(?:/[0-9]+|\.[0-9]+)?)
    | (?P<IDENT>[A-Za-z][A-Za-z0-9_]*)
    | (?P<COLON>:)
    | (?P<COMMA>,)
    | (?P<DOT>\.)
    | (?P<EQUALS>=)
    | (?P<MISMATCH>.)
    """,
    re.VERBOSE,
)


def tokenize(text: str, file: str = "<input>", errors: list[ParseError] | None = None) -> list[Token]:
    """토큰 목록을 반환한다. errors가 주어지면 어휘 오류를 모아 두고 계속 진행한다."""
    tokens: list[Token] = []
    line = 1
    line_start = 0
    for match in _TOKEN_PATTERN.finditer(text):
        group = match.lastgroup
        value = match.group()
        span = SourceSpan(file=file, line=line, column=match.start() - line_start + 1, length=len(value))
        if group == "NEWLINE":
            line += 1
            line_start = match.end()
            continue
        if group == "SKIP":
            continue
        if group == "MISMATCH":
            error = ParseError(f"예상하지 못한 문자 {value!r}", span, "lexical")
            if errors is None:
                raise error
            errors.append(error)
            continue
        if group == "RATIONAL" and "/" in value and int(value.split("/")[1]) == 0:
            error = ParseError(f"분모가 0인 유리수 {value!r}", span, "lexical")
            if errors is None:
                raise error
            errors.append(error)
            continue
        tokens.append(Token(kind=TokenKind[group], text=value, span=span))
    tokens.append(Token(kind=TokenKind.EOF, text="", span=SourceSpan(file, line, len(text) - line_start + 1, 0)))
    return tokens
