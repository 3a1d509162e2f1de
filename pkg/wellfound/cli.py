"""
Linha de comando do wellfound

Códigos de saída: 0 tudo ok, 1 alguma verificação falhou, 2 erro de uso ou de entrada.
"""

import argparse
import json
import logging
import sys
from typing import Iterable, List, Optional

from wellfound import __version__
from wellfound.commands import (
    DEMOS,
    canon_expression,
    classify_predicate,
    run_demo,
    sat,
    solve,
)
from wellfound.config import OUTPUT_FORMATS, RunConfig, get_config
from wellfound.errors import WellfoundError
from wellfound.formats import load_predicate, load_theory
from wellfound.predkit import Universe
from wellfound.report import Report
from wellfound.runner import SuiteRunner
from wellfound.suites import SUITE_NAMES

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2


def _add_universe_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--alphabet", type=int, help="Tamanho do alfabeto B")
    parser.add_argument("--depth", type=int, help="Profundidade d do universo")
    parser.add_argument(
        "--boundary", choices=("open", "closed"), help="Convenção nas folhas"
    )


def _add_prover_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--heuristic", action="store_true", default=None, help="Escolha por frequência"
    )
    parser.add_argument(
        "--unit-propagation",
        action="store_true",
        default=None,
        help="Preferir átomos de cláusulas unitárias",
    )


def _output_flags(default=None) -> argparse.ArgumentParser:
    """Flags aceitas antes ou depois do subcomando"""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format", dest="output_format", choices=OUTPUT_FORMATS, default=default
    )
    common.add_argument(
        "--log-level", default=default, help="Nível de logging (stderr)"
    )
    return common


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wellfound",
        description="Verificação de princípios de boa fundação em universos finitos",
        parents=[_output_flags()],
    )
    parser.add_argument("--version", action="version", version=__version__)
    # No subcomando, a flag só sobrescreve o valor global quando aparece
    common = _output_flags(argparse.SUPPRESS)
    sub = parser.add_subparsers(dest="command", required=True)

    check = sub.add_parser(
        "check", parents=[common], help="Executa uma suíte de teoremas"
    )
    check.add_argument("suite", help=f"Uma de: {', '.join(SUITE_NAMES)}")
    _add_universe_flags(check)
    _add_prover_flags(check)
    check.add_argument("--samples", type=int, help="Instâncias aleatórias")
    check.add_argument("--seed", type=int, help="Semente")
    check.add_argument("--workers", type=int, help="Processos paralelos")

    for name, text in (("solve", "Decide consistência"), ("sat", "Busca modelo")):
        cmd = sub.add_parser(name, parents=[common], help=f"{text} de uma teoria JSON")
        cmd.add_argument("input_path", metavar="file")
        _add_prover_flags(cmd)

    classify = sub.add_parser(
        "classify", parents=[common], help="Classifica um predicado"
    )
    classify.add_argument("input_path", metavar="file")
    _add_universe_flags(classify)

    demo = sub.add_parser("demo", parents=[common], help="Demonstrações narradas")
    demo.add_argument("name", help=f"Uma de: {', '.join(DEMOS)}")
    demo.add_argument("--m", type=int, default=3, help="|A| no pigeonhole")
    demo.add_argument("--n", type=int, default=2, help="|B| no pigeonhole")
    _add_universe_flags(demo)

    canon = sub.add_parser(
        "canon", parents=[common], help="Tabela-verdade canônica de uma expressão"
    )
    canon.add_argument("expression")
    canon.add_argument("--generators", help="Geradores separados por vírgula")
    canon.add_argument("--max-generators", type=int, help="Limite de geradores")
    return parser


def _config_from_args(args: argparse.Namespace) -> RunConfig:
    overrides = {
        name: getattr(args, name, None)
        for name in (
            "command",
            "input_path",
            "alphabet",
            "depth",
            "boundary",
            "heuristic",
            "unit_propagation",
            "output_format",
            "samples",
            "seed",
            "workers",
            "max_generators",
            "log_level",
        )
    }
    return get_config(**overrides)


def format_report(report: Report, output_format: str) -> str:
    """Uma linha JSON por Report, ou texto legível"""
    if output_format == "json-lines":
        return report.model_dump_json()

    lines = [
        f"[{report.verdict.upper()}] {report.suite}/{report.check_id} "
        f"{report.universe}: {report.instances} instâncias, {report.failures} falhas "
        f"({report.duration_seconds:.2f}s)"
    ]
    if report.note:
        lines.append(f"  {report.note}")
    if report.witness is not None:
        lines.append(f"  testemunha: {json.dumps(report.witness, ensure_ascii=False)}")
    if report.counterexample is not None:
        lines.append(
            f"  contraexemplo: {json.dumps(report.counterexample, ensure_ascii=False)}"
        )
    return "\n".join(lines)


def _emit(reports: Iterable[Report], output_format: str) -> int:
    code = EXIT_OK
    for report in reports:
        print(format_report(report, output_format), flush=True)
        if not report.passed:
            code = EXIT_FAILURE
    return code


def _dispatch(args: argparse.Namespace, config: RunConfig) -> int:
    fmt = config.output_format
    if args.command == "check":
        runner = SuiteRunner(config)
        return _emit(runner.run_suite(args.suite), fmt)
    if args.command in ("solve", "sat"):
        theory = load_theory(config.input_path)
        if args.command == "solve":
            report = solve(theory, config.heuristic, config.unit_propagation)
        else:
            report = sat(theory, config.heuristic)
        return _emit([report], fmt)
    if args.command == "classify":
        universe = Universe.of(config.alphabet, config.depth)
        predicate = load_predicate(config.input_path, universe)
        return _emit([classify_predicate(predicate, config.boundary)], fmt)
    if args.command == "demo":
        return _emit([run_demo(args.name, config, args.m, args.n)], fmt)
    generators = args.generators.split(",") if args.generators else None
    names = [g.strip() for g in generators] if generators else None
    report = canon_expression(args.expression, names, config.max_generators)
    return _emit([report], fmt)


def main(argv: Optional[List[str]] = None) -> int:
    """Função principal"""
    parser = build_parser()
    args = parser.parse_args(argv)

    # Relatórios vão para stdout; logs para stderr
    logging.basicConfig(
        level=logging.INFO,
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        stream=sys.stderr,
    )

    try:
        config = _config_from_args(args)
        logging.getLogger().setLevel(config.log_level)
        return _dispatch(args, config)
    except WellfoundError as e:
        logger.error(f"{e}")
        print(f"erro: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
