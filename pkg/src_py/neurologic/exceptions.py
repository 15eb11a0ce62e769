"""
목적:
- neurologic 계층의 예외 타입을 표준화한다.

설명:
- 구성 시점 검증 실패, 연산 전제 조건 위반, 열거 상한 초과, 파싱 오류를
  명시적으로 구분해 CLI와 라이브러리 소비자가 처리 전략을 선택할 수 있게 한다.

디자인 패턴:
- 계층형 예외(Hierarchical Exception).

참조:
- src_py/neurologic/cli/main.py
- src_py/neurologic/textio/spans.py
"""

from __future__ import annotations

from typing import TYPE_CHECKING, Literal

if TYPE_CHECKING:
    from neurologic.textio.spans import SourceSpan

ParseCategory = Literal["lexical", "syntactic", "validation"]


class NeurologicError(Exception):
    """neurologic 공통 베이스 예외."""


class ConfigurationError(NeurologicError):
    """설정값이 유효하지 않을 때 발생한다."""


class ValidationError(NeurologicError):
    """넷/프로그램/해석 구성 시 불변식이 깨졌을 때 발생한다."""


class UnknownNeuronError(ValidationError):
    """시그니처 universe에 없는 뉴런을 참조할 때 발생한다."""


class SignatureMismatchError(ValidationError):
    """해석 또는 3-해석이 대상 시그니처를 벗어날 때 발생한다."""


class UniverseMismatchError(ValidationError):
    """엄격 모드에서 두 피연산자의 universe가 다를 때 발생한다."""


class PreconditionError(NeurologicError):
    """연산의 의미론적 전제 조건이 충족되지 않을 때 발생한다."""


class NotPositiveError(PreconditionError):
    """양의 넷/프로그램이 필요한 연산에 음수 가중치가 있을 때 발생한다."""


class NotAcyclicError(PreconditionError):
    """비순환 구조가 필요한 연산에 순환이 있을 때 발생한다."""


class NotMinimalistError(PreconditionError):
    """헤드당 규칙이 하나여야 하는 연산에 중복 헤드가 있을 때 발생한다."""

    def __init__(self, message: str, head: str) -> None:
        super().__init__(message)
        self.head = head


class NotOrdinaryError(PreconditionError):
    """ordinary 넷이 필요한 연산에 단위 가중치/임계값 규약이 깨졌을 때 발생한다."""


class InputOutsideInputLayerError(PreconditionError):
    """feed-forward 입력이 입력 레이어 밖 뉴런을 포함할 때 발생한다."""


class CapExceededError(NeurologicError):
    """열거 대상 universe가 설정된 상한을 넘을 때 발생한다."""


class NonMonotoneDetectedError(NeurologicError):
    """∅에서 시작한 Kleene 체인이 줄어들 때 발생한다."""


class IterationEscapedSublatticeError(NeurologicError):
    """엄격 모드의 안정 수정(stable revision) 반복이 [∅, I]를 벗어날 때 발생한다."""


class InfeasibleParamsError(NeurologicError):
    """무작위 생성 파라미터가 만족 불가능할 때 발생한다."""


class ParseError(NeurologicError):
    """DSL 파싱/검증 오류. 위치(span)와 분류(category)를 함께 가진다."""

    def __init__(self, message: str, span: SourceSpan, category: ParseCategory) -> None:
        super().__init__(f"{span}: {category} error: {message}")
        self.message = message
        self.span = span
        self.category = category


class ParseErrorGroup(NeurologicError):
    """`collect_errors` 모드에서 수집된 파싱 오류 묶음."""

    def __init__(self, errors: list[ParseError]) -> None:
        super().__init__("\n".join(str(error) for error in errors))
        self.errors = errors
