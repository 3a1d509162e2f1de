"""
Módulo de relações: codificação de relações como predicados e os princípios DC/CC/WBI
"""

import itertools
import logging
from dataclasses import dataclass
from typing import Iterator, List, Optional, Tuple

from wellfound.errors import InvalidArgumentsError
from wellfound.foundkit import (
    Boundary,
    FoundReport,
    check_principle,
    find_branch,
    find_unbarred_branch,
    is_productive,
    pruning,
)
from wellfound.predkit import Pred, Universe
from wellfound.seqcore import Alphabet, Branch, SeqU

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class HomRel:
    """Relação R sobre um alfabeto B, como matriz booleana B×B"""

    carrier: Alphabet
    table: Tuple[Tuple[bool, ...], ...]

    def __post_init__(self):
        n = self.carrier.size
        if len(self.table) != n or any(len(row) != n for row in self.table):
            raise InvalidArgumentsError(f"Matriz da relação deve ser {n}x{n}")

    @classmethod
    def from_function(cls, carrier: Alphabet, fn) -> "HomRel":
        return cls(
            carrier,
            tuple(
                tuple(bool(fn(b, c)) for c in carrier.elements())
                for b in carrier.elements()
            ),
        )

    def holds(self, b: int, c: int) -> bool:
        return self.table[b][c]


@dataclass(frozen=True)
class HetRel:
    """Relação R entre A = {0..m-1} e um alfabeto B"""

    domain_size: int
    codomain: Alphabet
    table: Tuple[Tuple[bool, ...], ...]

    def __post_init__(self):
        if len(self.table) != self.domain_size or any(
            len(row) != self.codomain.size for row in self.table
        ):
            raise InvalidArgumentsError(
                f"Matriz da relação deve ser {self.domain_size}x{self.codomain.size}"
            )

    @classmethod
    def from_function(cls, domain_size: int, codomain: Alphabet, fn) -> "HetRel":
        return cls(
            domain_size,
            codomain,
            tuple(
                tuple(bool(fn(a, b)) for b in codomain.elements())
                for a in range(domain_size)
            ),
        )

    def holds(self, a: int, b: int) -> bool:
        return self.table[a][b]


def all_hom_relations(carrier: Alphabet) -> Iterator[HomRel]:
    n = carrier.size
    for bits in itertools.product((False, True), repeat=n * n):
        yield HomRel(carrier, tuple(bits[i * n : (i + 1) * n] for i in range(n)))


def all_het_relations(domain_size: int, codomain: Alphabet) -> Iterator[HetRel]:
    n = codomain.size
    for bits in itertools.product((False, True), repeat=domain_size * n):
        yield HetRel(
            domain_size,
            codomain,
            tuple(bits[i * n : (i + 1) * n] for i in range(domain_size)),
        )


# Propriedades de relações homogêneas


def is_serial(R: HomRel) -> bool:
    """∀b ∃b' R(b, b')"""
    return all(any(row) for row in R.table)


def is_left_not_full(R: HomRel) -> bool:
    """∀b ∃b' ¬R(b, b')"""
    return all(not all(row) for row in R.table)


def has_least(R: HomRel) -> bool:
    """∃b ∀b' R(b, b')"""
    return any(all(row) for row in R.table)


def has_maximal(R: HomRel) -> bool:
    """∃b ∀b' ¬R(b, b')"""
    return any(not any(row) for row in R.table)


def _steps(b0: int, items: Tuple[int, ...]) -> Iterator[Tuple[int, int]]:
    prev = b0
    for b in items:
        yield prev, b
        prev = b


def _relation_pred(universe: Universe, member) -> Pred:
    mask = 0
    for i, items in enumerate(universe.tables.nodes):
        if member(items):
            mask |= 1 << i
    return Pred(universe, mask)


def _check_carrier(R: HomRel, universe: Universe, b0: int) -> None:
    if R.carrier != universe.alphabet:
        raise InvalidArgumentsError("Relação e universo com alfabetos diferentes")
    R.carrier.check(b0)


def chaining(R: HomRel, b0: int, universe: Universe) -> Pred:
    """
    Encadeamento de R a partir de b0: todos os passos consecutivos estão em R

    Args:
        R (HomRel): Relação sobre o alfabeto do universo
        b0 (int): Elemento inicial
        universe (Universe): Universo de destino

    Returns:
        Pred: u ∈ resultado sse R(b0,u0), R(u0,u1), ...
    """
    _check_carrier(R, universe, b0)
    return _relation_pred(
        universe, lambda items: all(R.holds(b, c) for b, c in _steps(b0, items))
    )


def antichaining(R: HomRel, b0: int, universe: Universe) -> Pred:
    """Dual do encadeamento: algum passo consecutivo está em R"""
    _check_carrier(R, universe, b0)
    return _relation_pred(
        universe, lambda items: any(R.holds(b, c) for b, c in _steps(b0, items))
    )


def alignment(R: HomRel, b0: int, universe: Universe) -> Pred:
    """⟨⟩ ↦ ⊤ | ⟨b⟩ ↦ R(b0, b) | u'⋆b⋆b' ↦ R(b, b')"""
    _check_carrier(R, universe, b0)

    def member(items: Tuple[int, ...]) -> bool:
        if not items:
            return True
        if len(items) == 1:
            return R.holds(b0, items[0])
        return R.holds(items[-2], items[-1])

    return _relation_pred(universe, member)


def blockings(R: HomRel, b0: int, universe: Universe) -> Pred:
    """⟨⟩ ↦ ⊥ | ⟨b⟩ ↦ R(b0, b) | u'⋆b⋆b' ↦ R(b, b')"""
    _check_carrier(R, universe, b0)

    def member(items: Tuple[int, ...]) -> bool:
        if not items:
            return False
        if len(items) == 1:
            return R.holds(b0, items[0])
        return R.holds(items[-2], items[-1])

    return _relation_pred(universe, member)


def serial_walk(R: HomRel, b0: int, depth: int) -> Optional[Branch]:
    """Caminhada gulosa: escolhe o menor sucessor em cada passo"""
    values: List[int] = []
    b = b0
    for _ in range(depth):
        nxt = next((c for c in R.carrier.elements() if R.holds(b, c)), None)
        if nxt is None:
            return None
        values.append(nxt)
        b = nxt
    return Branch(R.carrier, tuple(values))


def check_DC_serial(R: HomRel, b0: int, depth: int) -> FoundReport:
    """
    R serial ⇒ o alinhamento de R a partir de b0 tem ramo de profundidade d

    Args:
        R (HomRel): Relação homogênea
        b0 (int): Elemento inicial
        depth (int): Profundidade de truncamento

    Returns:
        FoundReport: Veredito com ramo testemunha
    """
    universe = Universe(R.carrier, depth)
    serial = is_serial(R)
    aligned = alignment(R, b0, universe)
    branch = serial_walk(R, b0, depth) if serial else find_branch(aligned)
    if branch is not None and not all(u in aligned for u in branch.prefixes()):
        branch = find_branch(aligned)
    conclusion = find_branch(aligned) is not None
    return FoundReport(
        "DC_serial",
        (not serial) or conclusion,
        branch,
        detail={"hypothesis": serial, "conclusion": conclusion},
    )


def check_BI_least(R: HomRel, b0: int, depth: int) -> FoundReport:
    """Bloqueios de R a partir de b0 barrados ⇒ R tem elemento mínimo"""
    universe = Universe(R.carrier, depth)
    blocked = blockings(R, b0, universe)
    unbarred = find_unbarred_branch(blocked)
    least = has_least(R)
    witness = unbarred
    if unbarred is None and least:
        witness = next(b for b in R.carrier.elements() if all(R.table[b]))
    return FoundReport(
        "BI_least",
        unbarred is not None or least,
        witness,
        detail={"hypothesis": unbarred is None, "conclusion": least},
    )


# Construção reversa B_T / R_T


@dataclass(frozen=True)
class ReverseRelation:
    """Nós B_T = {u | T produtivo a partir de u} e R_T(u, u⋆b)"""

    nodes: Tuple[SeqU, ...]
    successors: Tuple[Tuple[int, ...], ...]


def reverse_relation(T: Pred, boundary: Boundary = Boundary.OPEN) -> ReverseRelation:
    pruned = pruning(T, boundary)
    universe = T.universe
    ranks = [i for i in range(universe.node_count) if pruned.has_rank(i)]
    position = {r: k for k, r in enumerate(ranks)}
    successors = tuple(
        tuple(position[c] for c in universe.tables.children[r] if c in position)
        for r in ranks
    )
    return ReverseRelation(tuple(universe.node(r) for r in ranks), successors)


def is_serial_below_depth(rel: ReverseRelation, depth: int) -> bool:
    """Todo nó de comprimento < d tem sucessor em R_T"""
    return all(
        succ or len(node) >= depth for node, succ in zip(rel.nodes, rel.successors)
    )


def transport_branch(T: Pred, boundary: Boundary = Boundary.OPEN) -> Optional[Branch]:
    """
    Caminha em R_T a partir de ⟨⟩ por d passos e decodifica o ramo de T

    Args:
        T (Pred): Predicado produtivo
        boundary (Boundary): Convenção nas folhas

    Returns:
        Optional[Branch]: α(n) = último elemento do n-ésimo passo, ou None
    """
    rel = reverse_relation(T, boundary)
    if not rel.nodes or len(rel.nodes[0]) != 0:
        return None
    k = 0
    for _ in range(T.universe.depth):
        if not rel.successors[k]:
            return None
        k = rel.successors[k][0]
    return Branch(T.universe.alphabet, rel.nodes[k].items)


# Relações heterogêneas e escolha contável


def _check_domain(R: HetRel, universe: Universe) -> None:
    if universe.depth > R.domain_size:
        raise InvalidArgumentsError(
            f"Profundidade {universe.depth} maior que o domínio {R.domain_size}"
        )
    if R.codomain != universe.alphabet:
        raise InvalidArgumentsError("Relação e universo com alfabetos diferentes")


def seq_alignment(R: HetRel, universe: Universe) -> Pred:
    """⟨⟩ ↦ ⊤ | u⋆b ↦ R(|u|, b)"""
    _check_domain(R, universe)
    return _relation_pred(
        universe, lambda items: not items or R.holds(len(items) - 1, items[-1])
    )


def seq_neg_alignment(R: HetRel, universe: Universe) -> Pred:
    """⟨⟩ ↦ ⊥ | u⋆b ↦ R(|u|, b)"""
    _check_domain(R, universe)
    return _relation_pred(
        universe, lambda items: bool(items) and R.holds(len(items) - 1, items[-1])
    )


def is_left_total(R: HetRel) -> bool:
    """∀a ∃b R(a, b)"""
    return all(any(row) for row in R.table)


def is_grounded(R: HetRel) -> bool:
    """∃a ∀b R(a, b)"""
    return any(all(row) for row in R.table)


def find_choice(R: HetRel) -> Optional[Branch]:
    """α com R(n, α(n)) para todo n"""
    values = []
    for row in R.table:
        b = next((b for b, ok in enumerate(row) if ok), None)
        if b is None:
            return None
        values.append(b)
    return Branch(R.codomain, tuple(values))


def find_escape(R: HetRel) -> Optional[Branch]:
    """α com ¬R(n, α(n)) para todo n; existe sse R não é barrado"""
    values = []
    for row in R.table:
        b = next((b for b, ok in enumerate(row) if not ok), None)
        if b is None:
            return None
        values.append(b)
    return Branch(R.codomain, tuple(values))


def is_barred_rel(R: HetRel) -> bool:
    """∀α ∃n R(n, α(n))"""
    return find_escape(R) is None


def check_CC(R: HetRel) -> FoundReport:
    """R total à esquerda ⇒ R tem função escolha"""
    total = is_left_total(R)
    choice = find_choice(R)
    return FoundReport(
        "CC",
        (not total) or choice is not None,
        choice,
        detail={"hypothesis": total, "conclusion": choice is not None},
    )


def check_WBI(R: HetRel) -> FoundReport:
    """R barrada ⇒ R fundamentada (∃a ∀b R(a, b))"""
    barred = is_barred_rel(R)
    grounded = is_grounded(R)
    witness = find_escape(R)
    if witness is None and grounded:
        witness = next(a for a, row in enumerate(R.table) if all(row))
    return FoundReport(
        "WBI",
        (not barred) or grounded,
        witness,
        detail={"hypothesis": barred, "conclusion": grounded},
    )


def cc_agrees_with_dc(R: HetRel) -> bool:
    """Veredito de CC coincide com DC^productive sobre o alinhamento sequencial"""
    universe = Universe(R.codomain, R.domain_size)
    aligned = seq_alignment(R, universe)
    return check_CC(R).holds == check_principle("DC^productive", aligned).holds and (
        is_left_total(R) == is_productive(aligned)
    )


def wbi_agrees_with_bi(R: HetRel) -> bool:
    """Veredito de WBI coincide com BI^ind sobre o alinhamento sequencial negativo"""
    universe = Universe(R.codomain, R.domain_size)
    negative = seq_neg_alignment(R, universe)
    return check_WBI(R).holds == check_principle("BI^ind", negative).holds
