"""
목적:
- CLI 서브커맨드별 실행 함수를 제공한다.

설명:
- 각 함수는 argparse 네임스페이스와 설정을 받아 결과를 stdout에 쓰고 종료 코드를 반환한다.
- 텍스트 출력은 `{a, b}` 형식, `--json` 출력은 `SemanticsEnvelope` 스키마다.
- 의미론적 음성 결과(비동치)는 종료 코드 1, 나머지 성공은 0이다.

디자인 패턴:
- 커맨드 핸들러(Command Handler).

참조:
- src_py/neurologic/cli/main.py
- src_py/neurologic/textio/json_export.py
"""

from __future__ import annotations

import argparse
import logging
import sys
from collections.abc import Callable, Iterable
from dataclasses import asdict
from pathlib import Path
from typing import Any

import pydantic

from neurologic.config.models import SemanticsConfig
from neurologic.contracts.equivalence_models import EquivalenceVerdict
from neurologic.contracts.oracle_models import GenParams
from neurologic.core.signature import Interpretation, Signature
from neurologic.equivalence.checker import check, implication_ladder
from neurologic.exceptions import ConfigurationError, InfeasibleParamsError
from neurologic.fixpoint.kleene import iterate
from neurologic.nets import semantics as net_semantics
from neurologic.nets.layering import feed_forward, layers, truth_table
from neurologic.nets.net import Net, classify
from neurologic.oracle.experiment import flp_vs_aft_experiment, write_counterexamples
from neurologic.programs import semantics as program_semantics
from neurologic.programs.program import Program, classify_program, require_minimalist
from neurologic.textio.json_export import family_json, interpretation_json, net_json, program_json, to_json
from neurologic.textio.serializer import serialize_net, serialize_program
from neurologic.translate.passes import net_to_program, ordinary_net_to_ordinary_program, program_to_net

from .loading import load_net, load_operand, parse_interpretation

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_NEGATIVE = 1

type Handler = Callable[[argparse.Namespace, SemanticsConfig], int]


def _emit(text: str) -> None:
    sys.stdout.write(text if text.endswith("\n") else f"{text}\n")


def _note(message: str) -> None:
    logger.info(message)
    print(f"[note] {message}", file=sys.stderr)


def _format_names(names: Iterable[str]) -> str:
    return "{" + ", ".join(names) + "}"


def _emit_family(args: argparse.Namespace, key: str, sig: Signature, family: Iterable[Interpretation]) -> None:
    ordered = sig.sort_family(family)
    if args.json:
        _emit(to_json(key, sig.universe, **{key: family_json(sig, ordered)}))
        return
    for member in ordered:
        _emit(sig.format(member))


def _structure(operand: Net | Program) -> dict[str, Any]:
    if isinstance(operand, Net):
        return {"format": "net", **net_json(operand), "classification": asdict(classify(operand))}
    return {"format": "program", **program_json(operand), "classification": asdict(classify_program(operand))}


def _write_operand(operand: Net | Program) -> None:
    if isinstance(operand, Net):
        sys.stdout.write(serialize_net(operand))
    else:
        sys.stdout.write(serialize_program(operand))


def run_parse(args: argparse.Namespace, config: SemanticsConfig) -> int:
    operand = load_operand(args.file, args, config)
    if args.json:
        _emit(to_json("parse", operand.universe, **_structure(operand)))
    else:
        _write_operand(operand)
    return EXIT_OK


def _operator(operand: Net | Program) -> Callable[[Interpretation], Interpretation]:
    if isinstance(operand, Net):
        return lambda current: net_semantics.t_n(operand, current)
    return lambda current: program_semantics.t_p(operand, current)


def run_tp(args: argparse.Namespace, config: SemanticsConfig) -> int:
    operand = load_operand(args.file, args, config)
    sig = operand.sig
    start = parse_interpretation(args.interpretation, sig)
    op = _operator(operand)

    if args.steps is None:
        image = op(start)
        if args.json:
            image_json = interpretation_json(sig, image)
            _emit(to_json("tp", sig.universe, input=interpretation_json(sig, start), image=image_json))
        else:
            _emit(sig.format(image))
        return EXIT_OK

    trace = iterate(op, start, args.steps)
    if args.json:
        steps = [interpretation_json(sig, step) for step in trace.steps]
        start_json = interpretation_json(sig, start)
        _emit(to_json("tp", sig.universe, input=start_json, trace=steps, converged=trace.converged))
        return EXIT_OK
    for position, step in enumerate(trace.steps):
        _emit(f"step {position}: {sig.format(step)}")
    _emit("converged" if trace.converged else "not converged")
    return EXIT_OK


def run_lfp(args: argparse.Namespace, config: SemanticsConfig) -> int:
    operand = load_operand(args.file, args, config)
    if isinstance(operand, Net):
        model = net_semantics.least_model(operand, config.monotone_probe_count)
    else:
        model = program_semantics.least_model_p(operand, config.monotone_probe_count)
    if args.json:
        _emit(to_json("least_model", operand.universe, least_model=interpretation_json(operand.sig, model)))
    else:
        _emit(operand.sig.format(model))
    return EXIT_OK


def run_models(args: argparse.Namespace, config: SemanticsConfig) -> int:
    operand = load_operand(args.file, args, config)
    cap = config.enumeration_cap
    if isinstance(operand, Net):
        family = net_semantics.supported_models(operand, cap) if args.supported else net_semantics.models(operand, cap)
    elif args.supported:
        family = program_semantics.supported_models_p(operand, cap)
    else:
        family = program_semantics.models_p(operand, cap)
    _emit_family(args, "supported_models" if args.supported else "models", operand.sig, family)
    return EXIT_OK


def run_answersets(args: argparse.Namespace, config: SemanticsConfig) -> int:
    operand = load_operand(args.file, args, config)
    cap = config.enumeration_cap
    match args.semantics:
        case "aft":
            if isinstance(operand, Net):
                family = net_semantics.answer_sets(operand, cap)
            else:
                family = program_semantics.answer_sets_p(operand, cap)
        case "flp":
            if isinstance(operand, Net):
                _note("net에는 FLP answer set이 없어 net_to_program 번역 위에서 계산합니다")
                operand = net_to_program(operand)
            family = program_semantics.flp_answer_sets(operand, cap)
        case "ultimate":
            if isinstance(operand, Net):
                family = net_semantics.ultimate_answer_sets(operand, cap)
            else:
                require_minimalist(operand)
                family = program_semantics.ultimate_answer_sets_p(operand, cap, config.brute_force_gap_cap)
        case other:
            raise ConfigurationError(f"알 수 없는 의미론입니다: {other}")
    _emit_family(args, "answer_sets", operand.sig, family)
    return EXIT_OK


def run_eval(args: argparse.Namespace, config: SemanticsConfig) -> int:
    net = load_net(args.file, args, config)
    layered = layers(net)
    sig = net.sig
    if args.table:
        rows = truth_table(layered, config.enumeration_cap)
        if args.json:
            table = [
                {"input": interpretation_json(sig, inputs), "output": interpretation_json(sig, outputs)}
                for inputs, outputs in rows
            ]
            _emit(to_json("truth_table", sig.universe, table=table))
        else:
            for inputs, outputs in rows:
                _emit(f"{sig.format(inputs)} -> {sig.format(outputs)}")
        return EXIT_OK

    if args.input is None:
        raise ConfigurationError("eval에는 --input 또는 --table이 필요합니다")
    inputs = parse_interpretation(args.input, sig)
    outputs = feed_forward(layered, inputs)
    if args.json:
        payload = {"input": interpretation_json(sig, inputs), "output": interpretation_json(sig, outputs)}
        _emit(to_json("eval", sig.universe, **payload))
    else:
        _emit(sig.format(outputs))
    return EXIT_OK


def run_layers(args: argparse.Namespace, config: SemanticsConfig) -> int:
    net = load_net(args.file, args, config)
    layered = layers(net)
    if args.json:
        _emit(to_json("layers", net.universe, layers=[interpretation_json(net.sig, layer) for layer in layered.layers]))
        return EXIT_OK
    for position, layer in enumerate(layered.layers, start=1):
        _emit(f"layer {position}: {net.sig.format(layer)}")
    return EXIT_OK


def run_translate(args: argparse.Namespace, config: SemanticsConfig) -> int:
    operand = load_operand(args.file, args, config)
    translated: Net | Program
    if args.to == "program":
        if not isinstance(operand, Net):
            raise ConfigurationError("--to program은 넷 입력에만 쓸 수 있습니다")
        translated = ordinary_net_to_ordinary_program(operand) if args.ordinary else net_to_program(operand)
    else:
        if not isinstance(operand, Program):
            raise ConfigurationError("--to net은 프로그램 입력에만 쓸 수 있습니다")
        translated = program_to_net(operand)

    if args.json:
        _emit(to_json("translate", translated.universe, **_structure(translated)))
    else:
        _write_operand(translated)
    return EXIT_OK


def _emit_verdict(verdict: EquivalenceVerdict) -> None:
    if verdict.equivalent:
        _emit(f"{verdict.kind}: equivalent")
        return
    _emit(f"{verdict.kind}: not equivalent")
    witness = verdict.counterexample
    if witness is None:
        return
    if witness.interpretation is not None:
        _emit(f"  witness: {_format_names(witness.interpretation)}")
    if witness.pair is not None:
        _emit(f"  witness: ({_format_names(witness.pair.lower)}, {_format_names(witness.pair.upper)})")
    _emit(f"  left:  {' '.join(_format_names(part) for part in witness.left) or '-'}")
    _emit(f"  right: {' '.join(_format_names(part) for part in witness.right) or '-'}")


def run_equiv(args: argparse.Namespace, config: SemanticsConfig) -> int:
    left = load_operand(args.left, args, config)
    right = load_operand(args.right, args, config)
    if args.all:
        report = implication_ladder(left, right, config=config)
        if args.json:
            universe = report.verdicts["subsumption"].universe
            _emit(to_json("equivalence_ladder", universe, report=report))
        else:
            for verdict in report.verdicts.values():
                _emit_verdict(verdict)
            for kind, reason in report.skipped.items():
                _emit(f"{kind}: skipped ({reason})")
        equivalent = all(verdict.equivalent for verdict in report.verdicts.values())
        return EXIT_OK if equivalent else EXIT_NEGATIVE

    verdict = check(args.kind, left, right, config=config)
    if args.json:
        _emit(to_json("equivalence", verdict.universe, verdict=verdict))
    else:
        _emit_verdict(verdict)
    return EXIT_OK if verdict.equivalent else EXIT_NEGATIVE


def run_explore_flp(args: argparse.Namespace, config: SemanticsConfig) -> int:
    try:
        params = GenParams(
            min_neurons=min(1, args.max_neurons),
            max_neurons=args.max_neurons,
            negative_weight_fraction=0.0 if args.positive else 0.3,
            ordinary=args.ordinary,
            seed=args.seed,
        )
    except pydantic.ValidationError as exc:
        raise InfeasibleParamsError(f"생성 파라미터가 유효하지 않습니다: {exc.errors()[0]['msg']}") from exc

    report = flp_vs_aft_experiment(params, args.count, config=config)
    if args.out is not None:
        written = write_counterexamples(report, Path(args.out))
        _note(f"반례 {len(written)}개를 {args.out}에 썼습니다")

    if args.json:
        _emit(to_json("flp_experiment", [], report=report))
        return EXIT_OK
    _emit(f"instances: {report.instances_run}")
    _emit(f"aft subset of flp: {report.aft_subset_flp}")
    _emit(f"flp subset of aft: {report.flp_subset_aft}")
    _emit(f"aft answer sets: {report.aft_answer_sets_total}")
    _emit(f"flp answer sets: {report.flp_answer_sets_total}")
    _emit(f"counterexamples: {len(report.counterexamples)}")
    _emit(f"converse counterexamples: {len(report.converse_counterexamples)}")
    for counterexample in report.counterexamples:
        _emit(f"  instance {counterexample.instance}: {_format_names(counterexample.witness)}")
    return EXIT_OK


HANDLERS: dict[str, Handler] = {
    "parse": run_parse,
    "tp": run_tp,
    "lfp": run_lfp,
    "models": run_models,
    "answersets": run_answersets,
    "eval": run_eval,
    "layers": run_layers,
    "translate": run_translate,
    "equiv": run_equiv,
    "explore-flp": run_explore_flp,
}
