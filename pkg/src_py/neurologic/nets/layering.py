"""
목적:
- 비순환 넷의 레이어 분할과 feed-forward 불리언 함수 계산을 제공한다.

설명:
- 레이어는 최장 경로 레벨이다. fact는 레벨 1, 그 밖의 뉴런은 body 최대 레벨 + 1.
- feed-forward는 입력 레이어를 주어진 입력으로 고정(clamp)하고, 레이어마다 누적 활성값을 넘긴다.
  그래서 레이어를 건너뛰는 간선도 아래 레이어의 활성값을 본다.
  입력 레이어에 T_N을 그대로 적용하면 fact가 모두 켜져 함수가 상수가 된다.

디자인 패턴:
- 값 객체(Value Object) + 함수형 유틸.

참조:
- src_py/neurologic/nets/net.py
- src_py/neurologic/programs/program.py
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass

import networkx as nx

from neurologic.config.models import DEFAULT_ENUMERATION_CAP
from neurologic.core.firing import fires
from neurologic.core.signature import Interpretation, NeuronId, guard_cap, subsets_of
from neurologic.exceptions import InputOutsideInputLayerError, NotAcyclicError, ValidationError
from neurologic.nets.net import Net


@dataclass(frozen=True, slots=True)
class LayeredNet:
    """넷과 그 레이어 분할 N_1 ∪ … ∪ N_n."""

    net: Net
    layers: tuple[frozenset[NeuronId], ...]

    def __post_init__(self) -> None:
        layers = tuple(frozenset(layer) for layer in self.layers)
        object.__setattr__(self, "layers", layers)
        level: dict[NeuronId, int] = {}
        for position, layer in enumerate(layers, start=1):
            if not layer:
                raise ValidationError(f"{position}번째 레이어가 비었습니다")
            for name in layer:
                if name in level:
                    raise ValidationError(f"뉴런 {name!r}가 여러 레이어에 있습니다")
                level[name] = position
        if set(level) != set(self.net.universe):
            raise ValidationError("레이어 분할이 universe 전체를 덮지 않습니다")
        if layers and layers[0] != self.net.facts():
            raise ValidationError("입력 레이어 N_1은 fact 집합과 같아야 합니다")
        for source, target in self.net.weights:
            if level[source] >= level[target]:
                raise ValidationError(
                    f"간선 {source} -> {target}이 레이어 {level[source]}에서 {level[target]}로 향합니다"
                )

    @property
    def input_layer(self) -> frozenset[NeuronId]:
        return self.layers[0] if self.layers else frozenset()

    @property
    def output_layer(self) -> frozenset[NeuronId]:
        return self.layers[-1] if self.layers else frozenset()


def layer_levels(universe: Sequence[NeuronId], edges: Iterable[tuple[NeuronId, NeuronId]]) -> list[frozenset[NeuronId]]:
    """최장 경로 레벨 분할. 순환이 있으면 NotAcyclicError."""
    graph = nx.DiGraph()
    graph.add_nodes_from(universe)
    graph.add_edges_from(edges)
    try:
        order = list(nx.topological_sort(graph))
    except nx.NetworkXUnfeasible:
        cycle = [source for source, _ in nx.find_cycle(graph)]
        raise NotAcyclicError(f"순환이 있어 레이어로 나눌 수 없습니다: cycle={cycle}") from None

    level: dict[NeuronId, int] = {}
    for name in order:
        level[name] = 1 + max((level[source] for source in graph.predecessors(name)), default=0)
    depth = max(level.values(), default=0)
    return [frozenset(name for name in universe if level[name] == position) for position in range(1, depth + 1)]


def layers(net: Net) -> LayeredNet:
    """최장 경로 레이어링."""
    return LayeredNet(net=net, layers=tuple(layer_levels(net.universe, net.weights)))


def feed_forward(layered: LayeredNet, inputs: Interpretation) -> Interpretation:
    """f_N(I): 입력 레이어를 I로 고정하고 레이어별로 누적 전파한 뒤 출력 레이어만 남긴다."""
    outside = inputs - layered.input_layer
    if outside:
        raise InputOutsideInputLayerError(f"입력 레이어 밖 뉴런이 입력에 있습니다: {sorted(outside)}")

    net = layered.net
    active = frozenset(inputs)
    for layer in layered.layers[1:]:
        fired = frozenset(
            name for name in layer if fires(net.incoming(name), active, net.sig.theta[name])
        )
        active = active | fired
    return active & layered.output_layer


def truth_table(
    layered: LayeredNet,
    cap: int = DEFAULT_ENUMERATION_CAP,
) -> list[tuple[Interpretation, Interpretation]]:
    """입력 레이어의 모든 부분집합에 대한 (입력, f_N(입력)) 목록."""
    inputs = [name for name in layered.net.universe if name in layered.input_layer]
    guard_cap(len(inputs), cap, what="input layer")
    return [(assignment, feed_forward(layered, assignment)) for assignment in subsets_of(inputs)]
