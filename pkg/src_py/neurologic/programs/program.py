"""
목적:
- 신경 논리 프로그램(neural logic program)의 구문 타입과 구조 분류를 정의한다.

설명:
- 규칙은 `a0 ←(w) a1, …, ak` 형태이며 body는 (뉴런, 가중치) 열이다.
- 프로그램 구성 시 규칙 순서와 body 순서를 universe 순서로 정규화한다.
  그래서 프로그램 동등성은 규칙 집합의 동등성과 같다.
- fact 규칙의 헤드는 θ = −∞, 그 밖의 헤드는 유한 θ를 가져야 한다.
- 가중치 0은 기본적으로 거부하고, `permit_zero_weights`일 때만 허용한다.

디자인 패턴:
- 값 객체(Value Object).

참조:
- src_py/neurologic/programs/semantics.py
- src_py/neurologic/nets/layering.py
- src_py/neurologic/translate/passes.py
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field
from fractions import Fraction
from types import MappingProxyType

import networkx as nx

from neurologic.core.numbers import NegInfinity
from neurologic.core.signature import NeuronId, Signature
from neurologic.exceptions import NotMinimalistError, UnknownNeuronError, ValidationError
from neurologic.nets.layering import layer_levels
from neurologic.nets.net import Net

type WeightedAtom = tuple[NeuronId, Fraction]


@dataclass(frozen=True, slots=True)
class NeuralRule:
    """신경 규칙. head와 가중 body."""

    head: NeuronId
    body: tuple[WeightedAtom, ...] = ()

    def __post_init__(self) -> None:
        body = tuple((name, Fraction(weight)) for name, weight in self.body)
        names = [name for name, _ in body]
        if len(set(names)) != len(names):
            raise ValidationError(f"규칙 {self.head} <- …의 body에 중복 뉴런이 있습니다: {names}")
        object.__setattr__(self, "body", body)

    @property
    def atoms(self) -> frozenset[NeuronId]:
        """b(r): 가중치와 무관한 body 뉴런 집합."""
        return frozenset(name for name, _ in self.body)

    @property
    def is_fact(self) -> bool:
        return not self.body

    @property
    def is_positive(self) -> bool:
        return all(weight >= 0 for _, weight in self.body)


@dataclass(frozen=True, slots=True)
class ProgramClassification:
    """프로그램 구조 분류 결과."""

    positive: bool
    ordinary: bool
    minimalist: bool
    acyclic: bool


@dataclass(frozen=True, slots=True)
class Program:
    """시그니처 위의 유한 신경 규칙 집합."""

    sig: Signature
    rules: tuple[NeuralRule, ...]
    permit_zero_weights: bool = field(default=False, compare=False)
    _by_head: Mapping[NeuronId, tuple[NeuralRule, ...]] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        sig = self.sig
        canonical: set[NeuralRule] = set()
        for rule in self.rules:
            for name in (rule.head, *rule.atoms):
                if name not in sig:
                    raise UnknownNeuronError(f"규칙 헤드/바디의 뉴런 {name!r}가 universe에 없습니다")
            if not self.permit_zero_weights:
                zero = [name for name, weight in rule.body if weight == 0]
                if zero:
                    raise ValidationError(f"규칙 {rule.head} <- …에 가중치 0인 body 뉴런이 있습니다: {zero}")
            body = tuple(sorted(rule.body, key=lambda atom: sig.index(atom[0])))
            canonical.add(NeuralRule(rule.head, body))

        rules = tuple(sorted(canonical, key=lambda rule: _rule_key(sig, rule)))
        by_head: dict[NeuronId, list[NeuralRule]] = {}
        for rule in rules:
            by_head.setdefault(rule.head, []).append(rule)

        fact_heads = {rule.head for rule in rules if rule.is_fact}
        body_heads = {rule.head for rule in rules if not rule.is_fact}
        conflicts = sorted(fact_heads & body_heads, key=sig.index)
        if conflicts:
            raise ValidationError(f"뉴런 {conflicts[0]!r}가 fact 규칙과 body가 있는 규칙의 헤드를 겸합니다")
        for name in sig.universe:
            is_neg_infinity = isinstance(sig.theta[name], NegInfinity)
            if name in fact_heads and not is_neg_infinity:
                raise ValidationError(f"fact {name!r}의 임계값은 -inf 이어야 합니다 (θ={sig.theta[name]})")
            if name not in fact_heads and is_neg_infinity:
                raise ValidationError(f"neuron {name!r}: θ = -inf 는 fact 규칙의 헤드에만 허용됩니다")

        object.__setattr__(self, "rules", rules)
        object.__setattr__(self, "_by_head", MappingProxyType({head: tuple(group) for head, group in by_head.items()}))

    @property
    def universe(self) -> tuple[NeuronId, ...]:
        return self.sig.universe

    def rules_for(self, head: NeuronId) -> tuple[NeuralRule, ...]:
        return self._by_head.get(head, ())

    def heads(self) -> frozenset[NeuronId]:
        return frozenset(self._by_head)

    def with_rules(self, rules: Iterable[NeuralRule]) -> Program:
        """같은 시그니처 위에서 규칙만 바꾼 프로그램."""
        return Program(self.sig, tuple(rules), permit_zero_weights=self.permit_zero_weights)

    def dependency_edges(self) -> set[tuple[NeuronId, NeuronId]]:
        """가중치가 0이 아닌 body 뉴런 b에서 헤드 a로 가는 간선 집합."""
        return {(name, rule.head) for rule in self.rules for name, weight in rule.body if weight != 0}


def _rule_key(sig: Signature, rule: NeuralRule) -> tuple:
    return (
        sig.index(rule.head),
        len(rule.body),
        tuple((sig.index(name), weight) for name, weight in rule.body),
    )


def classify_program(prog: Program) -> ProgramClassification:
    """positive / ordinary / minimalist / acyclic 분류."""
    theta = prog.sig.theta
    positive = all(rule.is_positive for rule in prog.rules)
    ordinary = all(
        all(weight == 1 for _, weight in rule.body) and theta[rule.head] == len(rule.body)
        for rule in prog.rules
        if not rule.is_fact
    )
    minimalist = all(len(prog.rules_for(head)) == 1 for head in prog.heads())
    graph = nx.DiGraph()
    graph.add_nodes_from(prog.universe)
    graph.add_edges_from(prog.dependency_edges())
    acyclic = nx.is_directed_acyclic_graph(graph)
    return ProgramClassification(positive=positive, ordinary=ordinary, minimalist=minimalist, acyclic=acyclic)


def program_layers(prog: Program) -> list[frozenset[NeuronId]]:
    """헤드가 body 뉴런보다 엄격히 위에 오는 최장 경로 레이어 분할."""
    return layer_levels(prog.universe, prog.dependency_edges())


def require_minimalist(prog: Program) -> None:
    for head in sorted(prog.heads(), key=prog.sig.index):
        if len(prog.rules_for(head)) > 1:
            raise NotMinimalistError(
                f"program is not minimalist: 헤드 {head!r}에 규칙이 {len(prog.rules_for(head))}개 있습니다",
                head=head,
            )


def dependency_graph(prog: Program) -> Net:
    """dep(P): 규칙 a ← …, b:w, …마다 간선 b -w-> a를 가진 넷."""
    require_minimalist(prog)
    weights: dict[tuple[NeuronId, NeuronId], Fraction] = {}
    for rule in prog.rules:
        for name, weight in rule.body:
            if weight != 0:
                weights[(name, rule.head)] = weight
        if not rule.is_fact and not any(weight != 0 for _, weight in rule.body):
            raise ValidationError(f"규칙 {rule.head} <- …의 body가 모두 가중치 0이라 넷 뉴런으로 옮길 수 없습니다")
    for name in prog.universe:
        if not prog.rules_for(name):
            raise ValidationError(f"뉴런 {name!r}는 어떤 규칙의 헤드도 아니라 넷 뉴런으로 옮길 수 없습니다")
    return Net(sig=prog.sig, weights=weights)
