"""
목적:
- `neurologic` 명령행 진입점을 제공한다.

설명:
- 서브커맨드: parse, tp, lfp, models, answersets, eval, layers, translate, equiv, explore-flp.
- 공통 플래그(--json, --cap, --permit-zero-weights, --seed, --as, --all-errors, -v)는
  모든 서브커맨드 뒤에 올 수 있다.
- 종료 코드: 0 성공, 1 의미론적 음성, 2 사용법/설정 오류, 3 파싱/검증/전제 조건 오류, 4 열거 상한 초과.
- 결과는 stdout, `[error] ...` 진단은 stderr로 쓴다.

디자인 패턴:
- 드라이버(Driver Script) + 커맨드 디스패치(Command Dispatch).

참조:
- src_py/neurologic/cli/commands.py
- src_py/neurologic/cli/loading.py
"""

from __future__ import annotations

import argparse
import logging
import sys
from collections.abc import Sequence

from neurologic.contracts.equivalence_models import EQUIVALENCE_KINDS
from neurologic.exceptions import (
    CapExceededError,
    ConfigurationError,
    InfeasibleParamsError,
    NeurologicError,
)
from neurologic.version import __version__

from .commands import HANDLERS
from .loading import build_config

EXIT_USAGE = 2
EXIT_INVALID = 3
EXIT_CAP = 4


def _common_flags() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="결과를 JSON으로 출력")
    common.add_argument("--cap", type=int, default=None, help="열거 상한 (기본: NEUROLOGIC_ENUM_CAP 또는 20)")
    common.add_argument("--permit-zero-weights", action="store_true", help="프로그램 규칙의 가중치 0 허용")
    common.add_argument("--seed", type=int, default=0, help="무작위 생성 시드")
    common.add_argument("--as", dest="as_kind", choices=["net", "program"], default=None, help="입력 종류 지정")
    common.add_argument("--all-errors", action="store_true", help="첫 오류에서 멈추지 않고 파싱 오류를 모두 보고")
    common.add_argument("-v", "--verbose", action="count", default=0, help="진단 로그 수준 올리기 (-v INFO, -vv DEBUG)")
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_flags()
    parser = argparse.ArgumentParser(prog="neurologic", description="불리언 신경망/신경 논리 프로그램 의미론 엔진")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    commands = parser.add_subparsers(dest="command", required=True)

    parse = commands.add_parser("parse", parents=[common], help="검증 후 정규형 출력")
    parse.add_argument("file")

    tp = commands.add_parser("tp", parents=[common], help="즉시 귀결 연산자 적용/추적")
    tp.add_argument("file")
    tp.add_argument("-I", dest="interpretation", default="", help="해석 (예: a,b)")
    tp.add_argument("--steps", type=int, default=None, help="반복 단계 수")

    lfp = commands.add_parser("lfp", parents=[common], help="최소 모델 (positive 전용)")
    lfp.add_argument("file")

    models = commands.add_parser("models", parents=[common], help="모델/지지 모델 열거")
    models.add_argument("file")
    models.add_argument("--supported", action="store_true", help="지지 모델(고정점)만")

    answersets = commands.add_parser("answersets", parents=[common], help="answer set 열거")
    answersets.add_argument("file")
    answersets.add_argument("--semantics", choices=["aft", "flp", "ultimate"], default="aft")

    evaluate = commands.add_parser("eval", parents=[common], help="feed-forward 넷 평가")
    evaluate.add_argument("file")
    evaluate.add_argument("--input", default=None, help="입력 레이어 해석 (예: a,c)")
    evaluate.add_argument("--table", action="store_true", help="전체 진리표 출력")

    layered = commands.add_parser("layers", parents=[common], help="레이어 분할 출력")
    layered.add_argument("file")

    translate = commands.add_parser("translate", parents=[common], help="넷과 프로그램 사이 번역")
    translate.add_argument("file")
    translate.add_argument("--to", choices=["program", "net"], required=True)
    translate.add_argument("--ordinary", action="store_true", help="ordinary 넷을 단위 가중치 프로그램으로")

    equiv = commands.add_parser("equiv", parents=[common], help="동치 판정")
    equiv.add_argument("left")
    equiv.add_argument("right")
    group = equiv.add_mutually_exclusive_group()
    group.add_argument("--kind", choices=list(EQUIVALENCE_KINDS), default="subsumption")
    group.add_argument("--all", action="store_true", help="적용 가능한 모든 동치 판정")
    equiv.add_argument("--strict", action="store_true", help="universe가 다르면 오류")

    explore = commands.add_parser("explore-flp", parents=[common], help="AFT/FLP answer set 비교 실험")
    explore.add_argument("--count", type=int, default=100)
    explore.add_argument("--max-neurons", type=int, default=6)
    explore.add_argument("--positive", action="store_true", help="음수 가중치 없이 생성")
    explore.add_argument("--ordinary", action="store_true", help="ordinary 프로그램만 생성")
    explore.add_argument("--out", default=None, help="반례 .nlp 파일을 쓸 디렉터리")
    return parser


def _configure_logging(verbosity: int) -> None:
    level = logging.WARNING
    if verbosity == 1:
        level = logging.INFO
    elif verbosity >= 2:
        level = logging.DEBUG
    logging.basicConfig(level=level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s", force=True)


def _report(exc: BaseException) -> None:
    for line in str(exc).splitlines() or [type(exc).__name__]:
        print(f"[error] {line}", file=sys.stderr)


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    _configure_logging(args.verbose)

    try:
        config = build_config(args)
        return HANDLERS[args.command](args, config)
    except (ConfigurationError, InfeasibleParamsError) as exc:
        _report(exc)
        return EXIT_USAGE
    except CapExceededError as exc:
        _report(exc)
        return EXIT_CAP
    except NeurologicError as exc:
        _report(exc)
        return EXIT_INVALID


def run() -> None:
    """콘솔 스크립트 진입점."""
    raise SystemExit(main())


if __name__ == "__main__":
    run()
