"""
목적:
- neurologic 패키지의 공개 진입점을 제공한다.

설명:
- 불리언 신경망(net)과 신경 논리 프로그램(program)의 정확한 유리수 의미론 엔진이다.
- 넷/프로그램 타입, 의미론 연산, 번역, 동치 판정, DSL 입출력, 설정/예외를 함께 노출한다.

디자인 패턴:
- 퍼사드(Facade).

참조:
- src_py/neurologic/nets/semantics.py
- src_py/neurologic/programs/semantics.py
- src_py/neurologic/equivalence/checker.py
"""

from .config.models import DEFAULT_ENUMERATION_CAP, SemanticsConfig, default_config
from .contracts.equivalence_models import Counterexample, EquivalenceVerdict, LadderReport
from .contracts.oracle_models import ExperimentReport, GenParams
from .core.numbers import NEG_INFINITY, NegInfinity, ext_ge
from .core.signature import Interpretation, Signature, ThreeInterpretation
from .equivalence.checker import check, implication_ladder, verify_counterexample
from .exceptions import (
    CapExceededError,
    ConfigurationError,
    NeurologicError,
    NotMinimalistError,
    NotPositiveError,
    ParseError,
    ParseErrorGroup,
    PreconditionError,
    ValidationError,
)
from .nets.layering import LayeredNet, feed_forward, layers
from .nets.net import Net, classify
from .nets.semantics import answer_sets, fitting, least_model, phi_dagger, supported_models, t_n, ultimate
from .programs.program import NeuralRule, Program, classify_program
from .programs.semantics import answer_sets_p, fitting_p, flp_answer_sets, least_model_p, t_p
from .textio.parser import parse_net, parse_program
from .textio.serializer import serialize_net, serialize_program
from .translate.passes import net_to_program, ordinary_net_to_ordinary_program, program_to_net
from .version import __version__

__all__ = [
    "__version__",
    "DEFAULT_ENUMERATION_CAP",
    "SemanticsConfig",
    "default_config",
    "NEG_INFINITY",
    "NegInfinity",
    "ext_ge",
    "Interpretation",
    "Signature",
    "ThreeInterpretation",
    "Net",
    "LayeredNet",
    "classify",
    "layers",
    "feed_forward",
    "t_n",
    "least_model",
    "supported_models",
    "fitting",
    "phi_dagger",
    "answer_sets",
    "ultimate",
    "NeuralRule",
    "Program",
    "classify_program",
    "t_p",
    "least_model_p",
    "fitting_p",
    "answer_sets_p",
    "flp_answer_sets",
    "net_to_program",
    "ordinary_net_to_ordinary_program",
    "program_to_net",
    "check",
    "implication_ladder",
    "verify_counterexample",
    "Counterexample",
    "EquivalenceVerdict",
    "LadderReport",
    "GenParams",
    "ExperimentReport",
    "parse_net",
    "parse_program",
    "serialize_net",
    "serialize_program",
    "NeurologicError",
    "ConfigurationError",
    "ValidationError",
    "PreconditionError",
    "NotPositiveError",
    "NotMinimalistError",
    "CapExceededError",
    "ParseError",
    "ParseErrorGroup",
]
