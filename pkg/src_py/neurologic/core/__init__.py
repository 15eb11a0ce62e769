"""
목적:
- 공통 도메인 타입(시그니처, 확장 유리수, 해석, 3-해석)의 공개 진입점을 제공한다.

설명:
- 모든 값은 생성 후 불변이며 연산은 순수 함수다.

디자인 패턴:
- 모듈 퍼사드(Module Facade).

참조:
- src_py/neurologic/core/numbers.py
- src_py/neurologic/core/signature.py
"""

from .firing import (
    body_sum,
    fires,
    fires_somewhere,
    fires_throughout,
    interval_max_sum,
    interval_min_sum,
)
from .numbers import (
    NEG_INFINITY,
    ExtendedRational,
    NegInfinity,
    ext_ge,
    format_rational,
    format_rational_exact,
    parse_rational,
    weighted_sum,
)
from .signature import (
    Interpretation,
    NeuronId,
    Signature,
    ThreeInterpretation,
    all_interpretations,
    all_three_interpretations,
    guard_cap,
    precision_leq,
    subsets_between,
    subsets_of,
    validate_neuron_id,
)

__all__ = [
    "NEG_INFINITY",
    "ExtendedRational",
    "NegInfinity",
    "ext_ge",
    "weighted_sum",
    "parse_rational",
    "format_rational",
    "format_rational_exact",
    "NeuronId",
    "Interpretation",
    "Signature",
    "ThreeInterpretation",
    "precision_leq",
    "all_interpretations",
    "all_three_interpretations",
    "subsets_between",
    "subsets_of",
    "guard_cap",
    "validate_neuron_id",
    "body_sum",
    "fires",
    "fires_throughout",
    "fires_somewhere",
    "interval_min_sum",
    "interval_max_sum",
]
