"""
Orquestração das suítes de verificação
"""

import logging
from concurrent.futures import ProcessPoolExecutor
from datetime import datetime, timezone
from typing import Any, Dict, Iterable, Iterator, List

from wellfound.config import RunConfig
from wellfound.report import Report
from wellfound.suites import Check, suite_checks

logger = logging.getLogger(__name__)

__all__ = ["Report", "SuiteRunner", "run_check"]


def run_check(check: Check, config: RunConfig) -> Report:
    """Executa uma verificação isolada; usada também pelos processos do pool"""
    return check(config)


class SuiteRunner:
    """Executa suítes sobre uma configuração e acumula estatísticas"""

    def __init__(self, config: RunConfig):
        """
        Inicializa o executor

        Args:
            config (RunConfig): Universo, convenção de fronteira, amostragem e paralelismo
        """
        self.config = config

        # Estatísticas
        self.stats: Dict[str, Any] = {
            "total_runs": 0,
            "checks_passed": 0,
            "checks_failed": 0,
            "checks_skipped": 0,
            "instances": 0,
            "last_run": None,
        }

    def run_suite(self, name: str) -> Iterator[Report]:
        """
        Executa as verificações de uma suíte, na ordem de registro

        Args:
            name (str): Nome da suíte ou "all"

        Returns:
            Iterator[Report]: Um Report por teorema, em ordem determinística
        """
        checks = suite_checks(name)
        logger.info(
            f"Iniciando suíte {name} com {len(checks)} verificações "
            f"(alfabeto={self.config.alphabet}, profundidade={self.config.depth}, "
            f"fronteira={self.config.boundary.value})"
        )

        if self.config.workers > 1:
            with ProcessPoolExecutor(max_workers=self.config.workers) as pool:
                # map preserva a ordem de submissão
                reports = pool.map(run_check, checks, [self.config] * len(checks))
                for report in reports:
                    self._account(report)
                    yield report
        else:
            for check in checks:
                report = run_check(check, self.config)
                self._account(report)
                yield report

    def _account(self, report: Report) -> None:
        self.stats["instances"] += report.instances
        if report.verdict == "pass":
            self.stats["checks_passed"] += 1
            logger.info(
                f"{report.check_id}: ok em {report.instances} instâncias "
                f"({report.duration_seconds:.2f}s)"
            )
        elif report.verdict == "skip":
            self.stats["checks_skipped"] += 1
            logger.info(f"{report.check_id}: pulada ({report.note})")
        else:
            self.stats["checks_failed"] += 1
            logger.error(
                f"{report.check_id}: {report.failures} falhas em {report.instances} "
                f"instâncias; primeiro contraexemplo: {report.counterexample}"
            )

    def run(self, names: Iterable[str]) -> Dict[str, Any]:
        """
        Executa várias suítes e gera o relatório de execução

        Args:
            names (Iterable[str]): Nomes das suítes

        Returns:
            Dict[str, Any]: Relatório com os Reports de cada suíte
        """
        start_time = datetime.now(timezone.utc)
        self.stats["total_runs"] += 1
        self.stats["last_run"] = start_time.isoformat()

        logger.info("=== INICIANDO VERIFICAÇÕES ===")

        reports: List[Report] = []
        for name in names:
            reports.extend(self.run_suite(name))

        success = all(r.passed for r in reports)
        summary = self._generate_report(start_time, success)
        summary["reports"] = [r.model_dump() for r in reports]

        logger.info(
            f"=== VERIFICAÇÕES CONCLUÍDAS: {self.stats['checks_passed']} ok, "
            f"{self.stats['checks_failed']} falhas, "
            f"{self.stats['checks_skipped']} puladas ==="
        )
        return summary

    def _generate_report(self, start_time: datetime, success: bool) -> Dict[str, Any]:
        """
        Gera relatório de execução

        Args:
            start_time (datetime): Horário de início
            success (bool): Se nenhuma verificação falhou

        Returns:
            Dict[str, Any]: Relatório
        """
        end_time = datetime.now(timezone.utc)
        duration = (end_time - start_time).total_seconds()

        return {
            "execution_id": f"check_{int(start_time.timestamp())}",
            "start_time": start_time.isoformat(),
            "end_time": end_time.isoformat(),
            "duration_seconds": duration,
            "success": success,
            "statistics": self.stats.copy(),
        }
