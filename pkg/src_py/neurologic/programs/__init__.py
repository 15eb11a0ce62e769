"""
목적:
- 신경 논리 프로그램 계층의 공개 진입점을 제공한다.

디자인 패턴:
- 모듈 퍼사드(Module Facade).

참조:
- src_py/neurologic/programs/program.py
- src_py/neurologic/programs/semantics.py
"""

from .program import (
    NeuralRule,
    Program,
    ProgramClassification,
    classify_program,
    dependency_graph,
    program_layers,
    require_minimalist,
)
from .semantics import (
    answer_sets_p,
    fitting_p,
    flp_answer_sets,
    flp_reduct,
    horn_t_p,
    is_answer_set_p,
    is_flp_answer_set,
    least_model_p,
    models_p,
    phi_dagger_p,
    satisfies,
    supported_models_p,
    t_p,
    ultimate_answer_sets_p,
    ultimate_dagger_p,
    ultimate_p,
)

__all__ = [
    "NeuralRule",
    "Program",
    "ProgramClassification",
    "classify_program",
    "program_layers",
    "dependency_graph",
    "require_minimalist",
    "satisfies",
    "t_p",
    "horn_t_p",
    "models_p",
    "supported_models_p",
    "least_model_p",
    "fitting_p",
    "phi_dagger_p",
    "answer_sets_p",
    "ultimate_p",
    "ultimate_dagger_p",
    "ultimate_answer_sets_p",
    "flp_reduct",
    "flp_answer_sets",
    "is_answer_set_p",
    "is_flp_answer_set",
]
