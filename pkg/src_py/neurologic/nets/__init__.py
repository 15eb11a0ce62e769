"""
목적:
- 신경망 계층의 공개 진입점을 제공한다.

설명:
- 넷 타입, 구조 분류, 의미론 연산, 레이어/feed-forward 계산을 하나의 네임스페이스로 노출한다.

디자인 패턴:
- 모듈 퍼사드(Module Facade).

참조:
- src_py/neurologic/nets/net.py
- src_py/neurologic/nets/semantics.py
- src_py/neurologic/nets/layering.py
"""

from .layering import LayeredNet, feed_forward, layer_levels, layers, truth_table
from .net import Net, NetClassification, body, classify, facts
from .semantics import (
    answer_sets,
    fitting,
    least_model,
    models,
    phi_dagger,
    supported_models,
    t_n,
    ultimate,
    ultimate_answer_sets,
    ultimate_dagger,
    ultimate_lower,
)

__all__ = [
    "Net",
    "NetClassification",
    "LayeredNet",
    "body",
    "facts",
    "classify",
    "t_n",
    "least_model",
    "models",
    "supported_models",
    "fitting",
    "phi_dagger",
    "answer_sets",
    "ultimate",
    "ultimate_lower",
    "ultimate_dagger",
    "ultimate_answer_sets",
    "layer_levels",
    "layers",
    "feed_forward",
    "truth_table",
]
