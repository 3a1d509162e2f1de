"""
Leitura de arquivos de teoria e de predicado, e serialização de testemunhas
"""

import json
import logging
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Union

from pydantic import BaseModel, Field, ValidationError

from wellfound.approxkit import BarDerivation, ChoiceFun, PigeonholeReport
from wellfound.entailkit import (
    Ax,
    AxT,
    ClauseTheory,
    Cut,
    Derivation,
    Sequent,
    Valuation,
)
from wellfound.errors import InputFileError, InvalidArgumentsError
from wellfound.predkit import Pred, Universe
from wellfound.seqcore import Branch, SeqU

logger = logging.getLogger(__name__)

EMPTY_MARKERS = ("ε", "<>", "-")


class ClauseDocument(BaseModel):
    antecedent: List[str] = Field(default_factory=list, description="Γ")
    succedent: List[str] = Field(default_factory=list, description="Δ")


class TheoryDocument(BaseModel):
    """Documento JSON de uma teoria de cláusulas"""

    atoms: List[str] = Field(..., description="Nomes dos átomos, na ordem dos índices")
    clauses: List[ClauseDocument] = Field(default_factory=list, description="Cláusulas")

    def to_theory(self) -> ClauseTheory:
        try:
            return ClauseTheory.from_names(
                self.atoms, ((c.antecedent, c.succedent) for c in self.clauses)
            )
        except InvalidArgumentsError as e:
            raise InputFileError(f"Teoria inválida: {e}") from e


def parse_theory(text: str) -> ClauseTheory:
    """
    Converte o texto JSON de uma teoria

    Args:
        text (str): Documento `{"atoms": [...], "clauses": [...]}`

    Returns:
        ClauseTheory: Teoria validada
    """
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise InputFileError(f"JSON inválido: {e.msg}", e.lineno, e.colno) from e

    try:
        document = TheoryDocument.model_validate(data)
    except ValidationError as e:
        first = e.errors()[0]
        where = ".".join(str(p) for p in first["loc"])
        raise InputFileError(
            f"Documento de teoria inválido em {where}: {first['msg']}"
        ) from e

    theory = document.to_theory()
    logger.debug(f"Teoria com {theory.size} átomos e {len(theory.clauses)} cláusulas")
    return theory


def load_theory(path: Union[str, Path]) -> ClauseTheory:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise InputFileError(f"Não foi possível ler {path}: {e}") from e
    return parse_theory(text)


def theory_to_document(T: ClauseTheory) -> Dict[str, Any]:
    return {
        "atoms": list(T.atoms),
        "clauses": [
            {
                "antecedent": [T.atoms[i] for i in sorted(c.gamma)],
                "succedent": [T.atoms[i] for i in sorted(c.delta)],
            }
            for c in sorted(T.clauses, key=lambda c: (sorted(c.gamma), sorted(c.delta)))
        ],
    }


def parse_predicate(text: str, universe: Universe) -> Pred:
    """
    Lê um predicado listado como strings de dígitos, uma por linha

    Args:
        text (str): Conteúdo do arquivo; `#` inicia comentário
        universe (Universe): Universo U(B, d)

    Returns:
        Pred: Predicado com os membros listados
    """
    size = universe.alphabet.size
    seqs = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        entry = line.strip()
        if not entry:
            continue
        offset = line.index(entry)
        if entry in EMPTY_MARKERS:
            seqs.append(SeqU.empty(universe.alphabet))
            continue
        for col, ch in enumerate(entry):
            if not ch.isdigit() or int(ch) >= size:
                raise InputFileError(
                    f"Elemento '{ch}' fora do alfabeto de tamanho {size}",
                    lineno,
                    offset + col + 1,
                )
        if len(entry) > universe.depth:
            raise InputFileError(
                f"Sequência '{entry}' excede a profundidade {universe.depth}",
                lineno,
                offset + universe.depth + 1,
            )
        seqs.append(SeqU.from_text(universe.alphabet, entry))
    return Pred.from_sequences(universe, seqs)


def load_predicate(path: Union[str, Path], universe: Universe) -> Pred:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise InputFileError(f"Não foi possível ler {path}: {e}") from e
    return parse_predicate(text, universe)


# Serialização


class _IndexNames:
    """Nomes padrão: o próprio índice do átomo"""

    def __getitem__(self, i: int) -> str:
        return str(i)


def derivation_to_record(d: Derivation, atoms: Sequence[str]) -> Dict[str, Any]:
    """Registro aninhado com etiquetas AX | AXT | CUT"""
    return d.to_record(atoms)


def valuation_to_record(alpha: Valuation, atoms: Sequence[str]) -> Dict[str, int]:
    return alpha.as_dict(atoms)


def branch_to_text(alpha: Branch) -> str:
    return alpha.to_text()


def sequent_to_text(s: Sequent, atoms: Optional[Sequence[str]] = None) -> str:
    """Γ ▷ Δ com nomes de átomos (ou índices); lado vazio vira ∅"""

    def names(indices):
        if not indices:
            return "∅"
        return ", ".join(
            atoms[i] if atoms is not None else str(i) for i in sorted(indices)
        )

    return f"{names(s.gamma)} ▷ {names(s.delta)}"


def bar_derivation_to_record(d: BarDerivation) -> Dict[str, Any]:
    record: Dict[str, Any] = {"approx": [list(p) for p in d.approx.pairs]}
    if d.split is not None:
        record["split"] = d.split
        record["children"] = [bar_derivation_to_record(c) for c in d.children]
    return record


def witness_to_payload(witness: Any, atoms: Optional[Sequence[str]] = None) -> Any:
    """
    Converte qualquer testemunha dos motores em valor JSON

    Args:
        witness: Ramo, sequência, nível, função, derivação, modelo ou None
        atoms (Optional[Sequence[str]]): Nomes dos átomos para derivações e modelos

    Returns:
        Any: Valor serializável
    """
    if witness is None or isinstance(witness, (bool, int, str)):
        return witness
    if isinstance(witness, (Branch, SeqU)):
        return witness.to_text()
    if isinstance(witness, ChoiceFun):
        return list(witness.values)
    if isinstance(witness, Valuation):
        return valuation_to_record(witness, atoms) if atoms else list(witness.values)
    if isinstance(witness, (Ax, AxT, Cut)):
        return derivation_to_record(witness, atoms or _IndexNames())
    if isinstance(witness, BarDerivation):
        return bar_derivation_to_record(witness)
    if isinstance(witness, Sequent):
        return sequent_to_text(witness, atoms)
    if isinstance(witness, Pred):
        return witness.to_texts()
    if isinstance(witness, PigeonholeReport):
        return {
            "m": witness.m,
            "n": witness.n,
            "max_size": witness.max_size,
            "choice_function": witness_to_payload(witness.choice_function),
        }
    return str(witness)
