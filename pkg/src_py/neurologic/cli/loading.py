"""
목적:
- CLI 입력(파일/stdin, 해석 인자, 환경 변수)을 라이브러리 객체로 바꾼다.

설명:
- 파일 종류는 확장자(.nnet/.nlp)로 추론하고 `--as`가 있으면 그것을 따른다.
- 열거 상한 기본값은 `NEUROLOGIC_ENUM_CAP` 환경 변수에서 읽는다. 라이브러리는 환경을 읽지 않는다.

디자인 패턴:
- 드라이버 어댑터(Driver Adapter).

참조:
- src_py/neurologic/cli/main.py
- src_py/neurologic/config/models.py
"""

from __future__ import annotations

import argparse
import os
import sys
from collections.abc import Mapping
from pathlib import Path
from typing import Literal

import pydantic

from neurologic.config.models import DEFAULT_ENUMERATION_CAP, SemanticsConfig
from neurologic.core.signature import Interpretation, Signature
from neurologic.exceptions import ConfigurationError
from neurologic.nets.net import Net
from neurologic.programs.program import Program
from neurologic.textio.parser import parse_net, parse_program

ENUM_CAP_ENV_KEY = "NEUROLOGIC_ENUM_CAP"

type SourceKind = Literal["net", "program"]


def resolve_cap(raw_flag: int | None, environ: Mapping[str, str]) -> int:
    if raw_flag is not None:
        return raw_flag
    raw = environ.get(ENUM_CAP_ENV_KEY, "").strip()
    if not raw:
        return DEFAULT_ENUMERATION_CAP
    try:
        return int(raw)
    except ValueError:
        raise ConfigurationError(f"정수 환경 변수 형식이 잘못되었습니다: {ENUM_CAP_ENV_KEY}={raw}") from None


def build_config(args: argparse.Namespace, environ: Mapping[str, str] | None = None) -> SemanticsConfig:
    environ = os.environ if environ is None else environ
    try:
        return SemanticsConfig(
            enumeration_cap=resolve_cap(args.cap, environ),
            permit_zero_weights=args.permit_zero_weights,
            strict_universe=getattr(args, "strict", False),
        )
    except pydantic.ValidationError as exc:
        raise ConfigurationError(f"설정값이 유효하지 않습니다: {exc.errors()[0]['msg']}") from exc


def infer_kind(path: str, override: SourceKind | None) -> SourceKind:
    if override is not None:
        return override
    suffix = Path(path).suffix.lower()
    if suffix == ".nnet":
        return "net"
    if suffix == ".nlp":
        return "program"
    raise ConfigurationError(f"파일 종류를 추론할 수 없습니다: {path} (.nnet/.nlp 확장자 또는 --as net|program)")


def read_source(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text(encoding="utf-8")
    except FileNotFoundError:
        raise ConfigurationError(f"입력 파일이 존재하지 않습니다: {path}") from None


def load_operand(path: str, args: argparse.Namespace, config: SemanticsConfig) -> Net | Program:
    """파일을 읽어 넷 또는 프로그램으로 파싱한다. 0 가중치 허용 여부는 config를 따른다."""
    kind = infer_kind(path, args.as_kind)
    text = read_source(path)
    name = "<stdin>" if path == "-" else path
    if kind == "net":
        return parse_net(text, file=name, collect_errors=args.all_errors)
    return parse_program(
        text,
        file=name,
        permit_zero_weights=config.permit_zero_weights,
        collect_errors=args.all_errors,
    )


def load_net(path: str, args: argparse.Namespace, config: SemanticsConfig) -> Net:
    operand = load_operand(path, args, config)
    if not isinstance(operand, Net):
        raise ConfigurationError(f"넷 파일(.nnet)이 필요합니다: {path}")
    return operand


def parse_interpretation(raw: str, sig: Signature) -> Interpretation:
    """`a,b` 형식 인자를 해석으로 바꾼다. 빈 문자열은 ∅."""
    return sig.interpretation(token.strip() for token in raw.split(",") if token.strip())
