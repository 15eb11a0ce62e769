"""
목적:
- 다섯 가지 동치 개념(subsumption, supported, least, answerset, ultimate)의 결정 절차를 제공한다.

설명:
- 모든 판정은 전수 열거로 정확하고 완전하게 수행하며, 열거 상한이 크기를 제한한다.
- 두 피연산자의 universe가 다르면 합집합 universe에서 판정한다. 한쪽에 없는 뉴런은
  그쪽에서 입력 가중치 0이고 절대 발화하지 않는다. 엄격 모드에서는 UniverseMismatchError.
- 판정과 반례 선택은 합집합 universe를 이름순으로 정렬한 정규 시그니처 위에서 한다.
  반례는 그 열거 순서상 가장 앞선 증거이므로 인자 순서를 바꿔도 같은 증거가 나온다.

디자인 패턴:
- 서비스 레이어(Service Layer) + 어댑터(Operand Adapter).

참조:
- src_py/neurologic/nets/semantics.py
- src_py/neurologic/programs/semantics.py
- src_py/neurologic/contracts/equivalence_models.py
"""

from __future__ import annotations

import logging
from collections.abc import Callable

from neurologic.config.models import SemanticsConfig, default_config
from neurologic.contracts.equivalence_models import (
    EQUIVALENCE_KINDS,
    Counterexample,
    EquivalenceKind,
    EquivalenceVerdict,
    LadderReport,
    PairWitness,
)
from neurologic.core.signature import (
    Interpretation,
    Signature,
    ThreeInterpretation,
    all_interpretations,
    all_three_interpretations,
)
from neurologic.exceptions import ConfigurationError, NotPositiveError, UniverseMismatchError
from neurologic.nets import semantics as net_semantics
from neurologic.nets.net import Net, classify
from neurologic.programs import semantics as program_semantics
from neurologic.programs.program import Program, classify_program

logger = logging.getLogger(__name__)

type Operand = Net | Program


class OperandView:
    """넷/프로그램을 공통 연산자 인터페이스로 감싼 어댑터."""

    def __init__(self, operand: Operand, config: SemanticsConfig) -> None:
        self._operand = operand
        self._config = config
        self._universe = frozenset(operand.sig.universe)

    @property
    def sig(self) -> Signature:
        return self._operand.sig

    @property
    def is_positive(self) -> bool:
        if isinstance(self._operand, Net):
            return classify(self._operand).positive
        return classify_program(self._operand).positive

    def restrict(self, interpretation: Interpretation) -> Interpretation:
        return interpretation & self._universe

    def t(self, interpretation: Interpretation) -> Interpretation:
        restricted = self.restrict(interpretation)
        if isinstance(self._operand, Net):
            return net_semantics.t_n(self._operand, restricted)
        return program_semantics.t_p(self._operand, restricted)

    def ultimate(self, pair: ThreeInterpretation) -> ThreeInterpretation:
        restricted = ThreeInterpretation(self.restrict(pair.lower), self.restrict(pair.upper))
        if isinstance(self._operand, Net):
            return net_semantics.ultimate(self._operand, restricted)
        return program_semantics.ultimate_p(self._operand, restricted, gap_cap=self._config.brute_force_gap_cap)

    def least_model(self) -> Interpretation:
        if isinstance(self._operand, Net):
            return net_semantics.least_model(self._operand, self._config.monotone_probe_count)
        return program_semantics.least_model_p(self._operand, self._config.monotone_probe_count)

    def supported_models(self) -> frozenset[Interpretation]:
        cap = self._config.enumeration_cap
        if isinstance(self._operand, Net):
            return net_semantics.supported_models(self._operand, cap)
        return program_semantics.supported_models_p(self._operand, cap)

    def answer_sets(self) -> frozenset[Interpretation]:
        cap = self._config.enumeration_cap
        if isinstance(self._operand, Net):
            return net_semantics.answer_sets(self._operand, cap)
        return program_semantics.answer_sets_p(self._operand, cap)

    def is_supported_model(self, interpretation: Interpretation) -> bool:
        return interpretation <= self._universe and self.t(interpretation) == interpretation

    def is_answer_set(self, interpretation: Interpretation) -> bool:
        if not self.is_supported_model(interpretation):
            return False
        if isinstance(self._operand, Net):
            return net_semantics.phi_dagger(self._operand, interpretation) == interpretation
        return program_semantics.phi_dagger_p(self._operand, interpretation) == interpretation


def union_signature(left: Operand, right: Operand, *, strict: bool = False) -> Signature:
    """두 피연산자 universe의 합집합 시그니처. 왼쪽 선언 순서가 먼저 온다."""
    if strict and set(left.sig.universe) != set(right.sig.universe):
        only_left = sorted(set(left.sig.universe) - set(right.sig.universe))
        only_right = sorted(set(right.sig.universe) - set(left.sig.universe))
        raise UniverseMismatchError(f"universe가 다릅니다: left-only={only_left}, right-only={only_right}")
    universe = list(left.sig.universe)
    universe.extend(name for name in right.sig.universe if name not in left.sig)
    theta = {**right.sig.theta, **left.sig.theta}
    return Signature(universe=tuple(universe), theta=theta)


def canonical_signature(sig: Signature) -> Signature:
    """universe를 이름순으로 정렬한 시그니처. 반례 순위는 이 순서를 따른다."""
    return Signature(universe=tuple(sorted(sig.universe)), theta=dict(sig.theta))


def check(
    kind: EquivalenceKind,
    left: Operand,
    right: Operand,
    *,
    config: SemanticsConfig | None = None,
) -> EquivalenceVerdict:
    """kind 동치 여부를 판정한다."""
    config = config or default_config()
    if kind not in EQUIVALENCE_KINDS:
        raise ConfigurationError(f"알 수 없는 동치 종류입니다: {kind}")

    sig = canonical_signature(union_signature(left, right, strict=config.strict_universe))
    x = OperandView(left, config)
    y = OperandView(right, config)
    counterexample = _DECIDERS[kind](sig, x, y, config)
    verdict = EquivalenceVerdict(
        kind=kind,
        equivalent=counterexample is None,
        universe=list(sig.universe),
        counterexample=counterexample,
    )
    logger.debug("동치 판정: kind=%s, equivalent=%s", kind, verdict.equivalent)
    return verdict


def _decide_subsumption(sig: Signature, x: OperandView, y: OperandView, config: SemanticsConfig) -> Counterexample | None:
    for candidate in all_interpretations(sig, config.enumeration_cap):
        left, right = x.t(candidate), y.t(candidate)
        if left != right:
            return Counterexample(
                kind="subsumption",
                interpretation=sig.ordered(candidate),
                left=[sig.ordered(left)],
                right=[sig.ordered(right)],
                note="T(I)가 다릅니다",
            )
    return None


def _family_witness(
    kind: EquivalenceKind,
    sig: Signature,
    left: frozenset[Interpretation],
    right: frozenset[Interpretation],
) -> Counterexample | None:
    difference = left ^ right
    if not difference:
        return None
    witness = min(difference, key=sig.rank)
    return Counterexample(
        kind=kind,
        interpretation=sig.ordered(witness),
        left=[sig.ordered(witness)] if witness in left else [],
        right=[sig.ordered(witness)] if witness in right else [],
        note="한쪽에만 속하는 해석입니다",
    )


def _decide_supported(sig: Signature, x: OperandView, y: OperandView, config: SemanticsConfig) -> Counterexample | None:
    return _family_witness("supported", sig, x.supported_models(), y.supported_models())


def _decide_answerset(sig: Signature, x: OperandView, y: OperandView, config: SemanticsConfig) -> Counterexample | None:
    return _family_witness("answerset", sig, x.answer_sets(), y.answer_sets())


def _decide_least(sig: Signature, x: OperandView, y: OperandView, config: SemanticsConfig) -> Counterexample | None:
    if not (x.is_positive and y.is_positive):
        raise NotPositiveError("least 동치는 두 피연산자가 모두 positive일 때만 정의됩니다")
    left, right = x.least_model(), y.least_model()
    if left == right:
        return None
    return Counterexample(
        kind="least",
        left=[sig.ordered(left)],
        right=[sig.ordered(right)],
        note="최소 모델이 다릅니다",
    )


def _decide_ultimate(sig: Signature, x: OperandView, y: OperandView, config: SemanticsConfig) -> Counterexample | None:
    for pair in all_three_interpretations(sig, config.enumeration_cap):
        left, right = x.ultimate(pair), y.ultimate(pair)
        if left != right:
            return Counterexample(
                kind="ultimate",
                pair=PairWitness(lower=sig.ordered(pair.lower), upper=sig.ordered(pair.upper)),
                left=[sig.ordered(left.lower), sig.ordered(left.upper)],
                right=[sig.ordered(right.lower), sig.ordered(right.upper)],
                note="U(I, J)가 다릅니다",
            )
    return None


_DECIDERS: dict[str, Callable[[Signature, OperandView, OperandView, SemanticsConfig], Counterexample | None]] = {
    "subsumption": _decide_subsumption,
    "supported": _decide_supported,
    "least": _decide_least,
    "answerset": _decide_answerset,
    "ultimate": _decide_ultimate,
}


def verify_counterexample(
    counterexample: Counterexample,
    left: Operand,
    right: Operand,
    *,
    config: SemanticsConfig | None = None,
) -> bool:
    """반례를 두 피연산자에서 다시 평가해 실제로 갈리는지 확인한다."""
    config = config or default_config()
    x = OperandView(left, config)
    y = OperandView(right, config)
    match counterexample.kind:
        case "subsumption":
            witness = frozenset(counterexample.interpretation or ())
            return x.t(witness) != y.t(witness)
        case "supported":
            witness = frozenset(counterexample.interpretation or ())
            return x.is_supported_model(witness) != y.is_supported_model(witness)
        case "answerset":
            witness = frozenset(counterexample.interpretation or ())
            return x.is_answer_set(witness) != y.is_answer_set(witness)
        case "least":
            return x.least_model() != y.least_model()
        case "ultimate":
            if counterexample.pair is None:
                return False
            pair = ThreeInterpretation(frozenset(counterexample.pair.lower), frozenset(counterexample.pair.upper))
            return x.ultimate(pair) != y.ultimate(pair)
    return False


def implication_ladder(
    left: Operand,
    right: Operand,
    *,
    config: SemanticsConfig | None = None,
) -> LadderReport:
    """적용 가능한 모든 동치 개념을 판정한다. 양이 아닌 피연산자가 있으면 least는 건너뛴다."""
    config = config or default_config()
    report = LadderReport()
    positive = OperandView(left, config).is_positive and OperandView(right, config).is_positive
    for kind in EQUIVALENCE_KINDS:
        if kind == "least" and not positive:
            report.skipped[kind] = "positive가 아닌 피연산자가 있어 least 동치를 건너뜁니다"
            continue
        report.verdicts[kind] = check(kind, left, right, config=config)

    subsumption = report.verdicts["subsumption"]
    if subsumption.equivalent:
        broken = [kind for kind, verdict in report.verdicts.items() if not verdict.equivalent]
        if broken:
            report.implications_hold = False
            logger.error("subsumption 동치인데 다음 동치가 깨졌습니다: %s", broken)
    return report
