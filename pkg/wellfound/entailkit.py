"""
Módulo de teorias de cláusulas e da relação de consequência Γ ⊢_T Δ

A decisão usa divisão memorizada sobre átomos ainda não atribuídos, com as
regras Ax (átomo comum), AxT (subsunção por cláusula da teoria) e Cut.
"""

import itertools
import logging
from dataclasses import dataclass
from typing import (
    Any,
    Dict,
    FrozenSet,
    Iterable,
    Iterator,
    List,
    Optional,
    Sequence,
    Tuple,
    Union,
)

from wellfound.approxkit import (
    Approx,
    ApproxPred,
    ChoiceFun,
    barred,
    bar_derivation,
    check_bar_derivation,
    find_choice_function,
)
from wellfound.errors import InvalidArgumentsError, SizeLimitError
from wellfound.foundkit import FoundReport
from wellfound.seqcore import Alphabet

logger = logging.getLogger(__name__)

BOOL = Alphabet(2)

# Limite da enumeração exaustiva de modelos
MAX_BRUTEFORCE_ATOMS = 20


@dataclass(frozen=True)
class Sequent:
    """Γ ▷ Δ com Γ e Δ tratados como conjuntos de índices de átomos"""

    gamma: FrozenSet[int] = frozenset()
    delta: FrozenSet[int] = frozenset()

    @classmethod
    def of(cls, gamma: Iterable[int] = (), delta: Iterable[int] = ()) -> "Sequent":
        return cls(frozenset(gamma), frozenset(delta))

    def atoms(self) -> FrozenSet[int]:
        return self.gamma | self.delta

    def subsumes(self, other: "Sequent") -> bool:
        """self ⊆ other lado a lado (a cláusula self está em ↑{other})"""
        return self.gamma <= other.gamma and self.delta <= other.delta

    def weaken(self, gamma: Iterable[int] = (), delta: Iterable[int] = ()) -> "Sequent":
        return Sequent(self.gamma | frozenset(gamma), self.delta | frozenset(delta))


@dataclass(frozen=True)
class ClauseTheory:
    """Conjunto finito de cláusulas sobre átomos indexados"""

    atoms: Tuple[str, ...]
    clauses: FrozenSet[Sequent] = frozenset()

    def __post_init__(self):
        if len(set(self.atoms)) != len(self.atoms):
            raise InvalidArgumentsError("Nomes de átomos repetidos")
        n = len(self.atoms)
        for clause in self.clauses:
            if any(i < 0 or i >= n for i in clause.atoms()):
                raise InvalidArgumentsError(f"Cláusula com átomo fora de 0..{n - 1}")

    @classmethod
    def of(
        cls, atoms: Sequence[str], clauses: Iterable[Sequent] = ()
    ) -> "ClauseTheory":
        return cls(tuple(atoms), frozenset(clauses))

    @classmethod
    def from_names(
        cls,
        atoms: Sequence[str],
        clauses: Iterable[Tuple[Iterable[str], Iterable[str]]],
    ) -> "ClauseTheory":
        index = {name: i for i, name in enumerate(atoms)}
        try:
            built = [
                Sequent.of((index[a] for a in gamma), (index[a] for a in delta))
                for gamma, delta in clauses
            ]
        except KeyError as e:
            raise InvalidArgumentsError(f"Átomo desconhecido: {e.args[0]}") from e
        return cls.of(atoms, built)

    @property
    def size(self) -> int:
        return len(self.atoms)

    def check_sequent(self, s: Sequent) -> None:
        if any(i < 0 or i >= self.size for i in s.atoms()):
            raise InvalidArgumentsError("Sequente com átomo fora da teoria")


@dataclass(frozen=True)
class Valuation:
    """Modelo: valor booleano (0/1) por átomo"""

    values: Tuple[int, ...]

    def __call__(self, atom: int) -> int:
        return self.values[atom]

    def true_atoms(self) -> FrozenSet[int]:
        return frozenset(i for i, v in enumerate(self.values) if v)

    def as_dict(self, atoms: Sequence[str]) -> Dict[str, int]:
        return {name: self.values[i] for i, name in enumerate(atoms)}


# Derivações


@dataclass(frozen=True)
class Ax:
    sequent: Sequent
    atom: int

    def to_record(self, atoms: Sequence[str]) -> Dict[str, Any]:
        return {
            "rule": "AX",
            "sequent": _sequent_record(self.sequent, atoms),
            "atom": atoms[self.atom],
        }


@dataclass(frozen=True)
class AxT:
    sequent: Sequent
    clause: Sequent

    def to_record(self, atoms: Sequence[str]) -> Dict[str, Any]:
        return {
            "rule": "AXT",
            "sequent": _sequent_record(self.sequent, atoms),
            "clause": _sequent_record(self.clause, atoms),
        }


@dataclass(frozen=True)
class Cut:
    sequent: Sequent
    atom: int
    left: "Derivation"
    right: "Derivation"

    def to_record(self, atoms: Sequence[str]) -> Dict[str, Any]:
        return {
            "rule": "CUT",
            "sequent": _sequent_record(self.sequent, atoms),
            "atom": atoms[self.atom],
            "premises": [self.left.to_record(atoms), self.right.to_record(atoms)],
        }


Derivation = Union[Ax, AxT, Cut]


def _sequent_record(s: Sequent, atoms: Sequence[str]) -> Dict[str, List[str]]:
    return {
        "antecedent": [atoms[i] for i in sorted(s.gamma)],
        "succedent": [atoms[i] for i in sorted(s.delta)],
    }


def derivation_size(d: Derivation) -> int:
    if isinstance(d, Cut):
        return 1 + derivation_size(d.left) + derivation_size(d.right)
    return 1


class Prover:
    """
    Provador por divisão para uma teoria fixa, com memória entre chamadas

    Args:
        theory (ClauseTheory): Teoria de cláusulas
        heuristic (bool): Escolher o átomo mais frequente nas cláusulas ativas
        unit_propagation (bool): Preferir átomos que fecham uma cláusula unitária
    """

    def __init__(
        self,
        theory: ClauseTheory,
        heuristic: bool = False,
        unit_propagation: bool = False,
    ):
        self.theory = theory
        self.heuristic = heuristic
        self.unit_propagation = unit_propagation
        self.clauses = sorted(
            theory.clauses,
            key=lambda c: (
                len(c.gamma) + len(c.delta),
                sorted(c.gamma),
                sorted(c.delta),
            ),
        )
        self.all_atoms = frozenset(range(theory.size))
        self._memo: Dict[
            Tuple[FrozenSet[int], FrozenSet[int]], Optional[Derivation]
        ] = {}

    def subsuming_clause(
        self, gamma: FrozenSet[int], delta: FrozenSet[int]
    ) -> Optional[Sequent]:
        for clause in self.clauses:
            if clause.gamma <= gamma and clause.delta <= delta:
                return clause
        return None

    def _active(
        self, gamma: FrozenSet[int], delta: FrozenSet[int]
    ) -> Iterator[Sequent]:
        # Cláusulas ainda não satisfeitas pela atribuição parcial
        for clause in self.clauses:
            if not clause.gamma & delta and not clause.delta & gamma:
                yield clause

    def choose_atom(self, gamma: FrozenSet[int], delta: FrozenSet[int]) -> int:
        free = self.all_atoms - gamma - delta
        if self.unit_propagation:
            for clause in self._active(gamma, delta):
                remaining = clause.atoms() - gamma - delta
                if len(remaining) == 1:
                    return next(iter(remaining))
        if self.heuristic:
            counts = {a: 0 for a in free}
            for clause in self._active(gamma, delta):
                for a in clause.atoms() & free:
                    counts[a] += 1
            return min(free, key=lambda a: (-counts[a], a))
        return min(free)

    def derive(self, s: Sequent) -> Optional[Derivation]:
        """
        Decide Γ ⊢_T Δ

        Args:
            s (Sequent): Sequente sobre os átomos da teoria

        Returns:
            Optional[Derivation]: Derivação, ou None se não derivável
        """
        self.theory.check_sequent(s)
        return self._derive(s.gamma, s.delta)

    def _derive(
        self, gamma: FrozenSet[int], delta: FrozenSet[int]
    ) -> Optional[Derivation]:
        key = (gamma, delta)
        if key in self._memo:
            return self._memo[key]
        sequent = Sequent(gamma, delta)
        result: Optional[Derivation] = None
        shared = gamma & delta
        if shared:
            result = Ax(sequent, min(shared))
        else:
            clause = self.subsuming_clause(gamma, delta)
            if clause is not None:
                result = AxT(sequent, clause)
            elif gamma | delta != self.all_atoms:
                # Qualquer átomo livre serve para a divisão; basta tentar um
                atom = self.choose_atom(gamma, delta)
                left = self._derive(gamma, delta | {atom})
                if left is not None:
                    right = self._derive(gamma | {atom}, delta)
                    if right is not None:
                        result = Cut(sequent, atom, left, right)
        self._memo[key] = result
        return result

    def countermodel(self, s: Sequent) -> Optional[Valuation]:
        """Extensão total de Γ=1, Δ=0 que evita ⌄𝒯^C falhar"""
        self.theory.check_sequent(s)
        return self._countermodel(s.gamma, s.delta)

    def _countermodel(
        self, gamma: FrozenSet[int], delta: FrozenSet[int]
    ) -> Optional[Valuation]:
        if gamma & delta or self.subsuming_clause(gamma, delta) is not None:
            return None
        if gamma | delta == self.all_atoms:
            values = tuple(1 if i in gamma else 0 for i in range(self.theory.size))
            return Valuation(values)
        atom = self.choose_atom(gamma, delta)
        return self._countermodel(gamma | {atom}, delta) or self._countermodel(
            gamma, delta | {atom}
        )


def derivable(
    T: ClauseTheory,
    s: Sequent,
    heuristic: bool = False,
    unit_propagation: bool = False,
) -> Optional[Derivation]:
    return Prover(T, heuristic, unit_propagation).derive(s)


def positively_disprovable(
    T: ClauseTheory, s: Sequent, heuristic: bool = False
) -> Optional[Valuation]:
    """Valoração total com Γ verdadeiro, Δ falso e nenhuma cláusula positivamente falsa"""
    return Prover(T, heuristic).countermodel(s)


def check_derivation(T: ClauseTheory, d: Derivation) -> bool:
    """
    Reverifica uma derivação contra a teoria

    Args:
        T (ClauseTheory): Teoria
        d (Derivation): Derivação candidata

    Returns:
        bool: True se cada folha e cada corte satisfazem suas condições
    """
    s = d.sequent
    if isinstance(d, Ax):
        return d.atom in s.gamma and d.atom in s.delta
    if isinstance(d, AxT):
        return d.clause in T.clauses and d.clause.subsumes(s)
    if isinstance(d, Cut):
        if d.atom in s.atoms() or d.atom < 0 or d.atom >= T.size:
            return False
        return (
            d.left.sequent == Sequent(s.gamma, s.delta | {d.atom})
            and d.right.sequent == Sequent(s.gamma | {d.atom}, s.delta)
            and check_derivation(T, d.left)
            and check_derivation(T, d.right)
        )
    return False


# Verdade e falsidade positiva


def satisfies(alpha: Valuation, T: ClauseTheory) -> bool:
    """∀(Γ▷Δ) ∈ T: Γ ⊂ α ⇒ Δ )( α"""
    return all(
        not all(alpha(a) for a in c.gamma) or any(alpha(a) for a in c.delta)
        for c in T.clauses
    )


def positively_falsifies(alpha: Valuation, T: ClauseTheory) -> bool:
    """∃(Γ▷Δ) ∈ T: Γ ⊂ α ∧ Δ ⊂ ᾱ"""
    return any(
        all(alpha(a) for a in c.gamma) and not any(alpha(a) for a in c.delta)
        for c in T.clauses
    )


def sequent_holds_in(alpha: Valuation, s: Sequent) -> bool:
    return not all(alpha(a) for a in s.gamma) or any(alpha(a) for a in s.delta)


def all_valuations(size: int) -> Iterator[Valuation]:
    for values in itertools.product((0, 1), repeat=size):
        yield Valuation(values)


def enumerate_models(T: ClauseTheory) -> Iterator[Valuation]:
    if T.size > MAX_BRUTEFORCE_ATOMS:
        raise SizeLimitError(
            f"{T.size} átomos excedem o limite de enumeração {MAX_BRUTEFORCE_ATOMS}"
        )
    return (alpha for alpha in all_valuations(T.size) if satisfies(alpha, T))


def find_model_bruteforce(T: ClauseTheory) -> Optional[Valuation]:
    return next(enumerate_models(T), None)


def find_model(T: ClauseTheory, heuristic: bool = False) -> Optional[Valuation]:
    """Busca por divisão guiada por ⌄𝒯^C"""
    return positively_disprovable(T, Sequent(), heuristic)


def positively_unsatisfiable(T: ClauseTheory) -> bool:
    """Toda valoração falsifica positivamente alguma cláusula"""
    return all(positively_falsifies(alpha, T) for alpha in all_valuations(T.size))


# Tradução para aproximações de A × 𝔹


def translate(s: Sequent) -> Approx:
    """(a,1) para a ∈ Γ e (a,0) para a ∈ Δ"""
    return Approx(tuple(sorted([(a, 1) for a in s.gamma] + [(a, 0) for a in s.delta])))


def theory_as_approx(T: ClauseTheory) -> ApproxPred:
    return ApproxPred.from_table(T.size, BOOL, (translate(c) for c in T.clauses))


def choice_to_valuation(alpha: ChoiceFun) -> Valuation:
    return Valuation(alpha.values)


def check_completeness(T: ClauseTheory, heuristic: bool = False) -> FoundReport:
    """
    Compara o provador com os motores de aproximação sobre a teoria traduzida

    Args:
        T (ClauseTheory): Teoria
        heuristic (bool): Heurística de divisão

    Returns:
        FoundReport: holds se todas as coincidências e reverificações valem
    """
    prover = Prover(T, heuristic)
    derivation = prover.derive(Sequent())
    model = prover.countermodel(Sequent())
    approx = theory_as_approx(T)
    bar = bar_derivation(approx, Approx())
    choice = find_choice_function(approx.complement())

    checks = {
        "inconsistent_agrees": (derivation is not None) == (bar is not None),
        "satisfiable_agrees": (model is not None) == (choice is not None),
        "complement": (derivation is None) == (model is not None),
        "derivation_rechecks": derivation is None or check_derivation(T, derivation),
        "bar_rechecks": bar is None or check_bar_derivation(approx, bar),
        "model_rechecks": model is None or satisfies(model, T),
        "choice_is_model": choice is None or satisfies(choice_to_valuation(choice), T),
    }
    consistent = derivation is None
    satisfiable = model is not None
    unsatisfiable = positively_unsatisfiable(T)
    checks["positive_unsat_agrees"] = unsatisfiable == barred(approx)
    # consistente ⇒ satisfazível
    checks["compl_minus"] = (not consistent) or satisfiable
    # positivamente insatisfazível ⇒ inconsistente
    checks["compl_plus"] = (not unsatisfiable) or not consistent
    return FoundReport(
        "completeness",
        all(checks.values()),
        model if model is not None else derivation,
        detail={
            "consistent": consistent,
            "positively_unsatisfiable": unsatisfiable,
            **checks,
        },
    )
