"""
목적:
- 기준 구현, 무작위 생성기, FLP/AFT 실험의 공개 진입점을 제공한다.

디자인 패턴:
- 모듈 퍼사드(Module Facade).

참조:
- src_py/neurologic/oracle/brute.py
- src_py/neurologic/oracle/generator.py
- src_py/neurologic/oracle/experiment.py
"""

from .brute import brute_fitting, brute_fitting_p, brute_ultimate, brute_ultimate_p
from .experiment import flp_vs_aft_experiment, verify_counterexample, write_counterexamples
from .generator import instance_rng, random_net, random_ordinary_net, random_program

__all__ = [
    "brute_fitting",
    "brute_fitting_p",
    "brute_ultimate",
    "brute_ultimate_p",
    "flp_vs_aft_experiment",
    "instance_rng",
    "random_net",
    "random_ordinary_net",
    "random_program",
    "verify_counterexample",
    "write_counterexamples",
]
