"""
목적:
- 불리언 신경망(net)과 그 구조 분류(positive/ordinary/acyclic)를 정의한다.

설명:
- 넷은 뉴런 시그니처 위의 유한 가중 유향 그래프다. 없는 간선은 가중치 0(비연결)이다.
- 구성 시점에 "body가 비었다 ⇔ θ = −∞" 규약을 강제한다. 위반은 조용히 고치지 않고 예외로 알린다.
- 순환 판정과 레이어링은 networkx 유향 그래프로 계산한다.

디자인 패턴:
- 값 객체(Value Object).

참조:
- src_py/neurologic/nets/semantics.py
- src_py/neurologic/nets/layering.py
"""

from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass, field
from fractions import Fraction
from types import MappingProxyType

import networkx as nx

from neurologic.core.numbers import NegInfinity
from neurologic.core.signature import NeuronId, Signature
from neurologic.exceptions import UnknownNeuronError, ValidationError

type Edge = tuple[NeuronId, NeuronId]
type Incoming = tuple[tuple[NeuronId, Fraction], ...]


@dataclass(frozen=True, slots=True)
class NetClassification:
    """넷 구조 분류 결과."""

    positive: bool
    ordinary: bool
    acyclic: bool


@dataclass(frozen=True, slots=True)
class Net:
    """시그니처와 (source, target) → 0이 아닌 유리수 가중치 사상."""

    sig: Signature
    weights: Mapping[Edge, Fraction]
    _incoming: Mapping[NeuronId, Incoming] = field(init=False, repr=False, compare=False)
    _facts: frozenset[NeuronId] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        sig = self.sig
        weights: dict[Edge, Fraction] = {}
        for (source, target), raw in self.weights.items():
            for endpoint in (source, target):
                if endpoint not in sig:
                    raise UnknownNeuronError(f"간선 {source} -> {target}의 끝점 {endpoint!r}가 universe에 없습니다")
            weight = Fraction(raw)
            if weight == 0:
                raise ValidationError(f"간선 {source} -> {target}의 가중치가 0입니다 (0은 비연결을 뜻합니다)")
            weights[(source, target)] = weight

        incoming: dict[NeuronId, list[tuple[NeuronId, Fraction]]] = {name: [] for name in sig.universe}
        for (source, target), weight in sorted(weights.items(), key=lambda item: sig.index(item[0][0])):
            incoming[target].append((source, weight))

        facts: set[NeuronId] = set()
        for name in sig.universe:
            is_neg_infinity = isinstance(sig.theta[name], NegInfinity)
            if not incoming[name]:
                if not is_neg_infinity:
                    raise ValidationError(f"non-fact neuron {name!r}: body가 비었는데 임계값이 유한합니다 (θ={sig.theta[name]})")
                facts.add(name)
            elif is_neg_infinity:
                raise ValidationError(f"neuron {name!r}: body가 있는데 θ = -inf 입니다 (-inf는 fact 전용)")

        object.__setattr__(self, "weights", MappingProxyType(weights))
        object.__setattr__(self, "_incoming", MappingProxyType({name: tuple(edges) for name, edges in incoming.items()}))
        object.__setattr__(self, "_facts", frozenset(facts))

    @property
    def universe(self) -> tuple[NeuronId, ...]:
        return self.sig.universe

    def incoming(self, name: NeuronId) -> Incoming:
        """a로 들어오는 (source, weight) 목록. source는 universe 순서다."""
        try:
            return self._incoming[name]
        except KeyError:
            raise UnknownNeuronError(f"universe에 없는 뉴런입니다: {name!r}") from None

    def facts(self) -> frozenset[NeuronId]:
        return self._facts

    def graph(self) -> nx.DiGraph:
        """0이 아닌 간선으로 이루어진 유향 그래프."""
        graph = nx.DiGraph()
        graph.add_nodes_from(self.sig.universe)
        graph.add_edges_from(self.weights)
        return graph


def body(net: Net, name: NeuronId) -> frozenset[NeuronId]:
    """b_N(a): a로 0이 아닌 간선을 보내는 뉴런 집합."""
    return frozenset(source for source, _ in net.incoming(name))


def facts(net: Net) -> frozenset[NeuronId]:
    """facts(N): body가 빈 뉴런 집합."""
    return net.facts()


def classify(net: Net) -> NetClassification:
    """positive / ordinary / acyclic 분류."""
    positive = all(weight > 0 for weight in net.weights.values())
    ordinary = all(
        all(weight == 1 for _, weight in net.incoming(name))
        and net.sig.theta[name] == len(net.incoming(name))
        for name in net.universe
        if name not in net.facts()
    )
    acyclic = nx.is_directed_acyclic_graph(net.graph())
    return NetClassification(positive=positive, ordinary=ordinary, acyclic=acyclic)
