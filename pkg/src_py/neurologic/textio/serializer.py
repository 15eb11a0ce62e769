"""
목적:
- Program/Net을 정규형(canonical) DSL 텍스트로 직렬화한다.

설명:
- 프로그램은 universe 순서로 뉴런마다 fact 문장 또는 theta 선언을 먼저 쓰고, 이어서
  body가 있는 규칙을 정규 규칙 순서로 쓴다. 가중치 1은 생략한다.
- 넷은 universe 순서의 node 선언 뒤에 (source, target) 이름 사전순 간선을 쓴다.
- 줄바꿈은 LF이며 마지막 줄도 LF로 끝난다. 같은 객체는 항상 같은 바이트열을 낸다.

디자인 패턴:
- 함수형 유틸 모듈(Function Utility Module).

참조:
- src_py/neurologic/textio/parser.py
- src_py/neurologic/core/numbers.py
"""

from __future__ import annotations

from neurologic.core.numbers import format_rational
from neurologic.nets.net import Net
from neurologic.programs.program import NeuralRule, Program


def _literal(name: str, weight) -> str:
    return name if weight == 1 else f"{name} : {format_rational(weight)}"


def format_rule(rule: NeuralRule) -> str:
    if rule.is_fact:
        return f"{rule.head}."
    return f"{rule.head} <- " + ", ".join(_literal(name, weight) for name, weight in rule.body) + "."


def serialize_program(prog: Program) -> str:
    lines: list[str] = []
    facts = {rule.head for rule in prog.rules if rule.is_fact}
    for name in prog.universe:
        if name in facts:
            lines.append(f"{name}.")
        else:
            lines.append(f"theta {name} = {format_rational(prog.sig.theta[name])}.")
    lines.extend(format_rule(rule) for rule in prog.rules if not rule.is_fact)
    return "".join(f"{line}\n" for line in lines)


def serialize_net(net: Net) -> str:
    lines: list[str] = []
    facts = net.facts()
    for name in net.universe:
        if name in facts:
            lines.append(f"node {name} fact.")
        else:
            lines.append(f"node {name} theta {format_rational(net.sig.theta[name])}.")
    for (source, target), weight in sorted(net.weights.items()):
        lines.append(f"edge {source} -> {target} : {format_rational(weight)}.")
    return "".join(f"{line}\n" for line in lines)
