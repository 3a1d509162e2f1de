"""
Operações de alto nível compartilhadas pela CLI e pela API

Cada operação devolve um Report com a testemunha já reverificada.
"""

import logging
import time
from typing import Iterable, Optional

from wellfound.approxkit import pigeonhole_demo
from wellfound.boolalg import DEFAULT_MAX_GENERATORS, canon, parse_expr
from wellfound.config import RunConfig
from wellfound.entailkit import (
    ClauseTheory,
    Sequent,
    check_derivation,
    derivable,
    find_model,
    satisfies,
)
from wellfound.errors import UnknownDemoError
from wellfound.formats import witness_to_payload
from wellfound.foundkit import Boundary, classify, verify_witness
from wellfound.predkit import Pred
from wellfound.report import Report
from wellfound.suites import check_realisers

logger = logging.getLogger(__name__)

DEMOS = ("pigeonhole", "realiser")


def _theory_universe(T: ClauseTheory) -> str:
    return f"{T.size} átomos, {len(T.clauses)} cláusulas"


def solve(
    T: ClauseTheory, heuristic: bool = False, unit_propagation: bool = False
) -> Report:
    """
    Decide a consistência de uma teoria

    Args:
        T (ClauseTheory): Teoria de cláusulas
        heuristic (bool): Escolha de átomo pela frequência nas cláusulas ativas
        unit_propagation (bool): Preferir átomos de cláusulas unitárias

    Returns:
        Report: note CONSISTENT com modelo, ou INCONSISTENT com derivação de ∅ ▷ ∅
    """
    start = time.perf_counter()
    derivation = derivable(T, Sequent(), heuristic, unit_propagation)
    if derivation is not None:
        verified = check_derivation(T, derivation)
        note, witness = "INCONSISTENT", witness_to_payload(derivation, T.atoms)
    else:
        model = find_model(T, heuristic)
        verified = model is not None and satisfies(model, T)
        note, witness = "CONSISTENT", witness_to_payload(model, T.atoms)
    if not verified:
        logger.error(f"Testemunha de {note} não passou na reverificação")
    return Report(
        check_id="solve",
        suite="entailment",
        universe=_theory_universe(T),
        verdict="pass" if verified else "fail",
        instances=1,
        failures=0 if verified else 1,
        witness=witness,
        note=note,
        duration_seconds=time.perf_counter() - start,
    )


def sat(T: ClauseTheory, heuristic: bool = False) -> Report:
    """Busca um modelo; sem modelo, a derivação de ∅ ▷ ∅ certifica UNSAT"""
    start = time.perf_counter()
    model = find_model(T, heuristic)
    if model is not None:
        verified = satisfies(model, T)
        note, witness = "SAT", witness_to_payload(model, T.atoms)
    else:
        derivation = derivable(T, Sequent(), heuristic)
        verified = derivation is not None and check_derivation(T, derivation)
        note, witness = "UNSAT", witness_to_payload(derivation, T.atoms)
    return Report(
        check_id="sat",
        suite="entailment",
        universe=_theory_universe(T),
        verdict="pass" if verified else "fail",
        instances=1,
        failures=0 if verified else 1,
        witness=witness,
        note=note,
        duration_seconds=time.perf_counter() - start,
    )


def classify_predicate(T: Pred, boundary: Boundary = Boundary.OPEN) -> Report:
    """
    Classificação completa de um predicado, com testemunhas reverificadas

    Args:
        T (Pred): Predicado lido do arquivo
        boundary (Boundary): Convenção nas folhas

    Returns:
        Report: witness mapeia cada propriedade para veredito e testemunha
    """
    start = time.perf_counter()
    reports = classify(T, boundary)
    failures = [name for name, r in reports.items() if not verify_witness(T, r)]
    return Report(
        check_id="classify",
        suite="foundedness",
        universe=T.universe.describe(),
        verdict="fail" if failures else "pass",
        instances=len(reports),
        failures=len(failures),
        witness={
            name: {"holds": r.holds, "witness": witness_to_payload(r.witness)}
            for name, r in reports.items()
        },
        counterexample=failures or None,
        note=f"fronteira {boundary.value}",
        duration_seconds=time.perf_counter() - start,
    )


def run_demo(name: str, config: RunConfig, m: int = 3, n: int = 2) -> Report:
    """
    Demonstrações narradas

    Args:
        name (str): pigeonhole ou realiser
        config (RunConfig): Universo usado pelo realiser
        m (int): Tamanho do domínio no pigeonhole
        n (int): Tamanho do codomínio no pigeonhole

    Returns:
        Report: Resultado com testemunhas calculadas
    """
    if name == "realiser":
        return check_realisers(config)
    if name != "pigeonhole":
        raise UnknownDemoError(
            f"Demonstração desconhecida: {name}. Disponíveis: {', '.join(DEMOS)}"
        )
    start = time.perf_counter()
    report = pigeonhole_demo(m, n)
    ok = report.max_size == n and report.choice_function is None
    return Report(
        check_id="pigeonhole",
        suite="demo",
        universe=f"m={m}, n={n}",
        verdict="pass" if ok else "fail",
        instances=1,
        failures=0 if ok else 1,
        witness=witness_to_payload(report),
        note=report.narrative,
        duration_seconds=time.perf_counter() - start,
    )


def canon_expression(
    text: str,
    generators: Optional[Iterable[str]] = None,
    max_generators: int = DEFAULT_MAX_GENERATORS,
) -> Report:
    """Tabela-verdade canônica de uma expressão booleana"""
    expr = parse_expr(text)
    names = sorted(expr.generators()) if generators is None else list(generators)
    result = canon(expr, names, max_generators)
    return Report(
        check_id="canon",
        suite="boolalg",
        universe=f"{len(names)} geradores",
        verdict="pass",
        instances=1,
        witness={"generators": names, "bits": result.to_text()},
        note=str(expr),
    )
