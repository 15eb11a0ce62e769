"""
목적:
- 넷과 프로그램 사이의 구성적 번역을 제공한다.

설명:
- `net_to_program`은 뉴런마다 규칙 하나를 만드는 최소주의 프로그램 P_N을 만든다.
  fact도 빈 body 규칙으로 내보내 T_P(∅) = facts(N)을 유지한다.
- `ordinary_net_to_ordinary_program`은 ordinary 넷에서 단위 가중치 규칙만으로 된 P̂_N을 만든다.
- `program_to_net`은 최소주의 프로그램의 의존 그래프를 검증된 넷으로 만든다.
- 세 번역 모두 시그니처 객체를 그대로 재사용하므로 동치 검사에 정렬 단계가 필요 없다.

디자인 패턴:
- 변환 패스(Transformation Pass).

참조:
- src_py/neurologic/nets/net.py
- src_py/neurologic/programs/program.py
- src_py/neurologic/equivalence/checker.py
"""

from __future__ import annotations

import logging
from fractions import Fraction

from neurologic.exceptions import NotOrdinaryError
from neurologic.nets.net import Net, classify
from neurologic.programs.program import NeuralRule, Program, dependency_graph

logger = logging.getLogger(__name__)


def net_to_program(net: Net) -> Program:
    """P_N = {a ←(w_ba | b ∈ b_N(a)) b_N(a) | a ∈ N}."""
    rules = tuple(NeuralRule(head=name, body=net.incoming(name)) for name in net.universe)
    logger.debug("net -> program: rules=%d", len(rules))
    return Program(sig=net.sig, rules=rules)


def ordinary_net_to_ordinary_program(net: Net) -> Program:
    """P̂_N = {a ← b_N(a) | a ∈ N}. ordinary 넷에만 적용된다."""
    if not classify(net).ordinary:
        raise NotOrdinaryError("net is not ordinary: 단위 가중치와 θ(a) = |b_N(a)| 규약이 깨졌습니다")
    rules = tuple(
        NeuralRule(head=name, body=tuple((source, Fraction(1)) for source, _ in net.incoming(name)))
        for name in net.universe
    )
    return Program(sig=net.sig, rules=rules)


def program_to_net(prog: Program) -> Net:
    """최소주의 프로그램의 dep(P)를 넷으로 만든다."""
    net = dependency_graph(prog)
    logger.debug("program -> net: edges=%d", len(net.weights))
    return net
