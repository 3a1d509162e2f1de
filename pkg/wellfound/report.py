"""
Relatório de uma verificação e acumulador de instâncias
"""

import time
from typing import Any, Optional

from pydantic import BaseModel, Field

VERDICTS = ("pass", "fail", "skip")


class Report(BaseModel):
    """Resultado agregado de um teorema sobre um universo"""

    check_id: str = Field(..., description="Identificador da verificação")
    suite: str = Field(..., description="Suíte de origem")
    universe: str = Field(..., description="Descrição do universo")
    verdict: str = Field(..., description="pass, fail ou skip")
    instances: int = Field(0, description="Instâncias avaliadas")
    failures: int = Field(0, description="Instâncias que falharam")
    witness: Optional[Any] = Field(None, description="Testemunha representativa")
    counterexample: Optional[Any] = Field(None, description="Primeiro contraexemplo")
    note: str = Field("", description="Observação")
    duration_seconds: float = Field(0.0, description="Tempo de execução")

    @property
    def passed(self) -> bool:
        return self.verdict != "fail"


class Tally:
    """
    Acumula instâncias de uma verificação e guarda o primeiro contraexemplo

    Args:
        check_id (str): Identificador da verificação
        suite (str): Suíte de origem
        universe (str): Descrição do universo
    """

    def __init__(self, check_id: str, suite: str, universe: str):
        self.check_id = check_id
        self.suite = suite
        self.universe = universe
        self.instances = 0
        self.failures = 0
        self.witness: Any = None
        self.counterexample: Any = None
        self._start = time.perf_counter()

    def record(self, ok: bool, counterexample: Any = None, witness: Any = None) -> bool:
        self.instances += 1
        if not ok:
            self.failures += 1
            if self.counterexample is None:
                self.counterexample = counterexample
        elif self.witness is None and witness is not None:
            self.witness = witness
        return ok

    def report(self, note: str = "") -> Report:
        return Report(
            check_id=self.check_id,
            suite=self.suite,
            universe=self.universe,
            verdict="pass" if self.failures == 0 else "fail",
            instances=self.instances,
            failures=self.failures,
            witness=self.witness,
            counterexample=self.counterexample,
            note=note,
            duration_seconds=time.perf_counter() - self._start,
        )

    def skip(self, note: str) -> Report:
        return Report(
            check_id=self.check_id,
            suite=self.suite,
            universe=self.universe,
            verdict="skip",
            note=note,
        )
