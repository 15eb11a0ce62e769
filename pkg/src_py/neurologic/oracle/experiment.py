"""
목적:
- "모든 AFT answer set은 FLP answer set이다"라는 가설을 무작위 프로그램으로 측정한다.

설명:
- 인스턴스마다 answer_sets_p와 flp_answer_sets를 계산해 포함 관계를 세고,
  어긋난 해석을 반례로 기록한다. 반대 방향(FLP이지만 AFT가 아닌 해석)도 따로 센다.
- 반례는 `.nlp` 텍스트로 담아 CLI로 그대로 다시 돌려볼 수 있다.
- 보고서는 (params, instance_count)만으로 재현된다. 인스턴스는 순서대로 계산한다.

디자인 패턴:
- 서비스 레이어(Service Layer).

참조:
- src_py/neurologic/oracle/generator.py
- src_py/neurologic/contracts/oracle_models.py
- src_py/neurologic/programs/semantics.py
"""

from __future__ import annotations

import logging
from pathlib import Path

from neurologic.config.models import SemanticsConfig, default_config
from neurologic.contracts.oracle_models import ExperimentReport, FlpCounterexample, GenParams
from neurologic.exceptions import InfeasibleParamsError
from neurologic.oracle.generator import random_program
from neurologic.programs.semantics import answer_sets_p, flp_answer_sets, is_answer_set_p, is_flp_answer_set
from neurologic.textio.parser import parse_program
from neurologic.textio.serializer import serialize_program

logger = logging.getLogger(__name__)


def flp_vs_aft_experiment(
    params: GenParams,
    instance_count: int,
    *,
    config: SemanticsConfig | None = None,
) -> ExperimentReport:
    """instance_count개의 무작위 프로그램에서 AFT/FLP answer set을 비교한다."""
    config = config or default_config()
    if params.max_neurons > config.experiment_max_neurons:
        raise InfeasibleParamsError(
            f"FLP 실험은 뉴런 {config.experiment_max_neurons}개 이하만 지원합니다: max_neurons={params.max_neurons}"
        )
    if instance_count < 0:
        raise InfeasibleParamsError(f"instance_count는 0 이상이어야 합니다: {instance_count}")

    report = ExperimentReport(params=params, instance_count=instance_count)
    for index in range(instance_count):
        prog = random_program(params, index)
        aft = answer_sets_p(prog, config.enumeration_cap)
        flp = flp_answer_sets(prog, config.enumeration_cap)
        report.instances_run += 1
        report.aft_answer_sets_total += len(aft)
        report.flp_answer_sets_total += len(flp)
        report.aft_subset_flp += int(aft <= flp)
        report.flp_subset_aft += int(flp <= aft)
        if aft <= flp and flp <= aft:
            continue

        text = serialize_program(prog)
        for witness in prog.sig.sort_family(aft - flp):
            logger.warning("AFT answer set이 FLP answer set이 아닙니다: instance=%d, witness=%s", index, prog.sig.format(witness))
            report.counterexamples.append(
                FlpCounterexample(instance=index, program_text=text, witness=prog.sig.ordered(witness))
            )
        for witness in prog.sig.sort_family(flp - aft):
            logger.debug("FLP answer set이 AFT answer set이 아닙니다: instance=%d, witness=%s", index, prog.sig.format(witness))
            report.converse_counterexamples.append(
                FlpCounterexample(
                    instance=index,
                    program_text=text,
                    witness=prog.sig.ordered(witness),
                    direction="flp-not-aft",
                )
            )
    logger.info(
        "FLP 실험 완료: instances=%d, aft⊆flp=%d, counterexamples=%d",
        report.instances_run,
        report.aft_subset_flp,
        len(report.counterexamples),
    )
    return report


def verify_counterexample(counterexample: FlpCounterexample) -> bool:
    """반례 프로그램을 다시 파싱해 두 의미론에서 증거가 실제로 갈리는지 확인한다."""
    prog = parse_program(counterexample.program_text)
    witness = frozenset(counterexample.witness)
    aft = is_answer_set_p(prog, witness)
    flp = is_flp_answer_set(prog, witness)
    if counterexample.direction == "aft-not-flp":
        return aft and not flp
    return flp and not aft


def write_counterexamples(report: ExperimentReport, out_dir: Path) -> list[Path]:
    """반례마다 재현용 `.nlp` 파일을 쓰고 경로 목록을 반환한다."""
    out_dir.mkdir(parents=True, exist_ok=True)
    written: list[Path] = []
    for position, counterexample in enumerate([*report.counterexamples, *report.converse_counterexamples]):
        path = out_dir / f"instance-{counterexample.instance:05d}-{counterexample.direction}-{position}.nlp"
        header = f"% {counterexample.direction} witness: {{{', '.join(counterexample.witness)}}}\n"
        path.write_text(header + counterexample.program_text, encoding="utf-8")
        written.append(path)
    return written
