"""
목적:
- `.nlp`(신경 논리 프로그램)와 `.nnet`(넷) 텍스트를 검증된 도메인 객체로 파싱한다.

설명:
- 문장 단위 재귀 하강 파서다. 모든 문장은 `.`으로 끝난다.
- `collect_errors=True`이면 오류가 난 문장을 다음 `.`까지 건너뛰고 계속 진행한 뒤
  모인 오류를 ParseErrorGroup으로 던진다. 기본은 첫 오류에서 멈춘다.
- 프로그램 universe는 식별자가 처음 나타난 순서, 넷 universe는 node 선언 순서다.
- 프로그램에서 θ 선언이 없는 헤드는 들어오는 가중치가 모두 1일 때 최대 body 크기를 θ로 쓴다.
  규칙 헤드가 아닌 뉴런은 θ = 0이다.

디자인 패턴:
- 재귀 하강 파서(Recursive Descent Parser).

참조:
- src_py/neurologic/textio/lexer.py
- src_py/neurologic/programs/program.py
- src_py/neurologic/nets/net.py
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction

from neurologic.core.numbers import NEG_INFINITY, ExtendedRational, parse_rational
from neurologic.core.signature import NeuronId, Signature
from neurologic.exceptions import NeurologicError, ParseError, ParseErrorGroup
from neurologic.nets.net import Net
from neurologic.programs.program import NeuralRule, Program
from neurologic.textio.lexer import Token, TokenKind, tokenize
from neurologic.textio.spans import SourceSpan

logger = logging.getLogger(__name__)

_UNIT = Fraction(1)


@dataclass(slots=True)
class _RuleSyntax:
    head: NeuronId
    body: list[tuple[NeuronId, Fraction, SourceSpan]]
    span: SourceSpan


@dataclass(slots=True)
class _Cursor:
    """토큰 커서와 오류 수집기."""

    tokens: list[Token]
    collect: bool
    errors: list[ParseError] = field(default_factory=list)
    position: int = 0

    @property
    def current(self) -> Token:
        return self.tokens[self.position]

    def at_end(self) -> bool:
        return self.current.kind is TokenKind.EOF

    def peek(self, offset: int = 1) -> Token:
        return self.tokens[min(self.position + offset, len(self.tokens) - 1)]

    def advance(self) -> Token:
        token = self.current
        if token.kind is not TokenKind.EOF:
            self.position += 1
        return token

    def expect(self, kind: TokenKind, what: str) -> Token:
        token = self.current
        if token.kind is not kind:
            found = token.text or "end of input"
            raise ParseError(f"{what}가 와야 하는데 {found!r}가 왔습니다", token.span, "syntactic")
        return self.advance()

    def expect_keyword(self, keyword: str) -> Token:
        token = self.current
        if token.kind is not TokenKind.IDENT or token.text != keyword:
            raise ParseError(f"키워드 {keyword!r}가 와야 하는데 {token.text or 'end of input'!r}가 왔습니다", token.span, "syntactic")
        return self.advance()

    def report(self, error: ParseError) -> None:
        if not self.collect:
            raise error
        self.errors.append(error)

    def recover(self) -> None:
        """다음 문장 끝 `.` 뒤로 이동한다."""
        while not self.at_end() and self.current.kind is not TokenKind.DOT:
            self.advance()
        if not self.at_end():
            self.advance()

    def finish(self) -> None:
        if self.errors:
            raise ParseErrorGroup(self.errors) if len(self.errors) > 1 else self.errors[0]


def _rational(token: Token) -> Fraction:
    return parse_rational(token.text)


def _blame(exc: NeurologicError, anchors: dict[str, SourceSpan], fallback: SourceSpan) -> SourceSpan:
    """오류 메시지에 나오는 뉴런/간선 중 원문에서 가장 먼저 나타난 위치. 없으면 첫 문장 위치."""
    message = str(exc)
    named = [span for needle, span in anchors.items() if needle in message]
    candidates = named or list(anchors.values())
    return min(candidates, key=lambda span: (span.line, span.column), default=fallback)


def _tokens(text: str, file: str, collect: bool) -> _Cursor:
    lexical: list[ParseError] = []
    tokens = tokenize(text, file=file, errors=lexical if collect else None)
    cursor = _Cursor(tokens=tokens, collect=collect)
    cursor.errors.extend(lexical)
    return cursor


def parse_program(
    text: str,
    *,
    file: str = "<input>",
    permit_zero_weights: bool = False,
    collect_errors: bool = False,
) -> Program:
    """`.nlp` 텍스트를 Program으로 파싱한다."""
    cursor = _tokens(text, file, collect_errors)
    order: dict[NeuronId, SourceSpan] = {}
    declared: dict[NeuronId, tuple[Fraction, SourceSpan]] = {}
    facts: dict[NeuronId, SourceSpan] = {}
    rules: list[_RuleSyntax] = []

    while not cursor.at_end():
        try:
            _program_statement(cursor, order, declared, facts, rules, permit_zero_weights)
        except ParseError as error:
            cursor.report(error)
            cursor.recover()

    for name, (_, span) in declared.items():
        if name in facts:
            cursor.report(ParseError(f"fact {name!r}에 theta를 선언할 수 없습니다 (fact의 θ는 -inf)", span, "validation"))
    for rule in rules:
        if rule.head in facts:
            cursor.report(ParseError(f"fact {rule.head!r}는 body가 있는 규칙의 헤드가 될 수 없습니다", rule.span, "validation"))

    theta: dict[NeuronId, ExtendedRational] = {}
    for name in order:
        if name in facts:
            theta[name] = NEG_INFINITY
        elif name in declared:
            theta[name] = declared[name][0]
        else:
            own = [rule for rule in rules if rule.head == name]
            if not own:
                theta[name] = Fraction(0)
            elif all(weight == _UNIT for rule in own for _, weight, _ in rule.body):
                theta[name] = Fraction(max(len(rule.body) for rule in own))
            else:
                theta[name] = Fraction(0)
                cursor.report(
                    ParseError(f"non-fact neuron {name!r} lacks a threshold (missing threshold)", own[0].span, "validation")
                )
    cursor.finish()

    try:
        sig = Signature(universe=tuple(order), theta=theta)
        built = tuple(NeuralRule(name, ()) for name in facts) + tuple(
            NeuralRule(rule.head, tuple((atom, weight) for atom, weight, _ in rule.body)) for rule in rules
        )
        program = Program(sig=sig, rules=built, permit_zero_weights=permit_zero_weights)
    except NeurologicError as exc:
        anchors = {repr(name): span for name, span in order.items()}
        raise ParseError(str(exc), _blame(exc, anchors, SourceSpan(file, 1, 1, 0)), "validation") from exc
    logger.debug("program 파싱 완료: neurons=%d, rules=%d", len(program.universe), len(program.rules))
    return program


def _program_statement(
    cursor: _Cursor,
    order: dict[NeuronId, SourceSpan],
    declared: dict[NeuronId, tuple[Fraction, SourceSpan]],
    facts: dict[NeuronId, SourceSpan],
    rules: list[_RuleSyntax],
    permit_zero_weights: bool,
) -> None:
    first = cursor.current
    if first.kind is TokenKind.IDENT and first.text == "theta" and cursor.peek().kind is TokenKind.IDENT:
        cursor.advance()
        name = cursor.expect(TokenKind.IDENT, "뉴런 이름")
        cursor.expect(TokenKind.EQUALS, "'='")
        value = cursor.expect(TokenKind.RATIONAL, "유리수 임계값")
        cursor.expect(TokenKind.DOT, "'.'")
        order.setdefault(name.text, name.span)
        if name.text in declared:
            raise ParseError(f"뉴런 {name.text!r}의 theta가 중복 선언되었습니다", name.span, "validation")
        declared[name.text] = (_rational(value), name.span)
        return

    head = cursor.expect(TokenKind.IDENT, "뉴런 이름")
    if cursor.current.kind is TokenKind.DOT:
        cursor.advance()
        order.setdefault(head.text, head.span)
        facts.setdefault(head.text, head.span)
        return

    cursor.expect(TokenKind.RULE_ARROW, "'<-' 또는 '.'")
    body: list[tuple[NeuronId, Fraction, SourceSpan]] = []
    seen: set[NeuronId] = set()
    while True:
        atom = cursor.expect(TokenKind.IDENT, "body 뉴런 이름")
        weight = _UNIT
        weight_span = atom.span
        if cursor.current.kind is TokenKind.COLON:
            cursor.advance()
            literal = cursor.expect(TokenKind.RATIONAL, "유리수 가중치")
            weight, weight_span = _rational(literal), literal.span
        if atom.text in seen:
            raise ParseError(f"규칙 {head.text} <- …의 body에 뉴런 {atom.text!r}가 중복되었습니다", atom.span, "validation")
        if weight == 0 and not permit_zero_weights:
            raise ParseError(
                f"body 뉴런 {atom.text!r}의 가중치가 0입니다 (zero weight; --permit-zero-weights로 허용)",
                weight_span,
                "validation",
            )
        seen.add(atom.text)
        body.append((atom.text, weight, atom.span))
        if cursor.current.kind is not TokenKind.COMMA:
            break
        cursor.advance()
    cursor.expect(TokenKind.DOT, "',' 또는 '.'")

    order.setdefault(head.text, head.span)
    for name, _, span in body:
        order.setdefault(name, span)
    rules.append(_RuleSyntax(head=head.text, body=body, span=head.span))


def parse_net(text: str, *, file: str = "<input>", collect_errors: bool = False) -> Net:
    """`.nnet` 텍스트를 Net으로 파싱한다."""
    cursor = _tokens(text, file, collect_errors)
    nodes: dict[NeuronId, tuple[ExtendedRational, SourceSpan]] = {}
    edges: dict[tuple[NeuronId, NeuronId], tuple[Fraction, SourceSpan]] = {}

    while not cursor.at_end():
        try:
            _net_statement(cursor, nodes, edges)
        except ParseError as error:
            cursor.report(error)
            cursor.recover()

    targets: set[NeuronId] = set()
    for (source, target), (_, span) in edges.items():
        for endpoint in (source, target):
            if endpoint not in nodes:
                cursor.report(ParseError(f"선언되지 않은 node {endpoint!r}를 간선이 참조합니다", span, "validation"))
        if target in nodes and nodes[target][0] is NEG_INFINITY:
            cursor.report(ParseError(f"fact {target!r}로 들어오는 간선은 허용되지 않습니다", span, "validation"))
        targets.add(target)
    for name, (value, span) in nodes.items():
        if value is not NEG_INFINITY and name not in targets:
            cursor.report(
                ParseError(f"non-fact neuron {name!r}에 들어오는 간선이 없습니다 (fact로 선언하세요)", span, "validation")
            )
    cursor.finish()

    try:
        sig = Signature(universe=tuple(nodes), theta={name: value for name, (value, _) in nodes.items()})
        net = Net(sig=sig, weights={edge: weight for edge, (weight, _) in edges.items()})
    except NeurologicError as exc:
        anchors = {repr(name): span for name, (_, span) in nodes.items()}
        anchors.update({f"{source} -> {target}": span for (source, target), (_, span) in edges.items()})
        raise ParseError(str(exc), _blame(exc, anchors, SourceSpan(file, 1, 1, 0)), "validation") from exc
    logger.debug("net 파싱 완료: neurons=%d, edges=%d", len(net.universe), len(net.weights))
    return net


def _net_statement(
    cursor: _Cursor,
    nodes: dict[NeuronId, tuple[ExtendedRational, SourceSpan]],
    edges: dict[tuple[NeuronId, NeuronId], tuple[Fraction, SourceSpan]],
) -> None:
    keyword = cursor.expect(TokenKind.IDENT, "'node' 또는 'edge'")
    if keyword.text == "node":
        name = cursor.expect(TokenKind.IDENT, "뉴런 이름")
        kind = cursor.current
        if kind.kind is TokenKind.IDENT and kind.text == "fact":
            cursor.advance()
            value: ExtendedRational = NEG_INFINITY
        else:
            cursor.expect_keyword("theta")
            value = _rational(cursor.expect(TokenKind.RATIONAL, "유리수 임계값"))
        cursor.expect(TokenKind.DOT, "'.'")
        if name.text in nodes:
            raise ParseError(f"node {name.text!r}가 중복 선언되었습니다", name.span, "validation")
        nodes[name.text] = (value, name.span)
        return
    if keyword.text == "edge":
        source = cursor.expect(TokenKind.IDENT, "source 뉴런 이름")
        cursor.expect(TokenKind.EDGE_ARROW, "'->'")
        target = cursor.expect(TokenKind.IDENT, "target 뉴런 이름")
        cursor.expect(TokenKind.COLON, "':'")
        literal = cursor.expect(TokenKind.RATIONAL, "유리수 가중치")
        cursor.expect(TokenKind.DOT, "'.'")
        weight = _rational(literal)
        if weight == 0:
            raise ParseError(f"간선 {source.text} -> {target.text}의 가중치가 0입니다 (zero weight는 비연결)", literal.span, "validation")
        if (source.text, target.text) in edges:
            raise ParseError(f"간선 {source.text} -> {target.text}가 중복 선언되었습니다", source.span, "validation")
        edges[(source.text, target.text)] = (weight, source.span)
        return
    raise ParseError(f"'node' 또는 'edge'가 와야 하는데 {keyword.text!r}가 왔습니다", keyword.span, "syntactic")
