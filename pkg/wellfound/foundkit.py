"""
Módulo de fundação: noções de boa/má fundação, pontos fixos μ/ν e princípios DC/BI/KL/FT

As quantificações sobre extensões são truncadas na profundidade d do universo.
A convenção de fronteira decide como as folhas (|u| = d) se comportam nos
pontos fixos: OPEN (padrão) trata folhas em T como extensíveis no ν e só
admite folhas já em T no μ; CLOSED trata folhas como becos sem saída.
"""

import itertools
import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Callable, Dict, Iterator, List, Optional, Tuple, Union

from wellfound.errors import (
    DepthMismatchError,
    InvalidArgumentsError,
    UnknownPrincipleError,
)
from wellfound.predkit import (
    Pred,
    Universe,
    down_arborify,
    is_monotone,
    is_tree,
    up_monotonise,
)
from wellfound.seqcore import Alphabet, Branch, SeqU

logger = logging.getLogger(__name__)


class Boundary(str, Enum):
    OPEN = "open"
    CLOSED = "closed"


@dataclass(frozen=True)
class FoundReport:
    """
    Veredito de uma propriedade sobre um predicado

    Args:
        property (str): Nome da propriedade ou princípio
        holds (bool): Veredito
        witness: Ramo, sequência ou nível que certifica o veredito
        table (Optional[Pred]): Tabela do ponto fixo, quando houver
        detail (Dict[str, Any]): Informações auxiliares (hipótese, conclusão, metadados)
    """

    property: str
    holds: bool
    witness: Any = None
    table: Optional[Pred] = None
    detail: Dict[str, Any] = field(default_factory=dict, compare=False)


# Progressão e hereditariedade


def _leaf_exists_clause(boundary: Boundary) -> bool:
    return boundary == Boundary.OPEN


def _leaf_forall_clause(boundary: Boundary) -> bool:
    return boundary == Boundary.CLOSED


def progressing_at(T: Pred, u: SeqU, boundary: Boundary = Boundary.OPEN) -> bool:
    """u ∈ T ⇒ ∃a u⋆a ∈ T"""
    i = T.universe.rank(u)
    if not T.has_rank(i):
        return True
    children = T.universe.tables.children[i]
    if not children:
        return _leaf_exists_clause(boundary)
    return any(T.has_rank(c) for c in children)


def hereditary_at(T: Pred, u: SeqU, boundary: Boundary = Boundary.OPEN) -> bool:
    """(∀a u⋆a ∈ T) ⇒ u ∈ T"""
    i = T.universe.rank(u)
    if T.has_rank(i):
        return True
    children = T.universe.tables.children[i]
    if not children:
        return not _leaf_forall_clause(boundary)
    return not all(T.has_rank(c) for c in children)


def _inner_ranks(universe: Universe) -> range:
    return range(universe.tables.offsets[universe.depth])


def is_spread(T: Pred) -> bool:
    """⟨⟩ ∈ T e T progride em todo |u| < d"""
    if not T.has_rank(0):
        return False
    tables = T.universe.tables
    return all(
        not T.has_rank(i) or any(T.has_rank(c) for c in tables.children[i])
        for i in _inner_ranks(T.universe)
    )


def is_hereditary(T: Pred) -> bool:
    tables = T.universe.tables
    return all(
        T.has_rank(i) or not all(T.has_rank(c) for c in tables.children[i])
        for i in _inner_ranks(T.universe)
    )


def is_barricaded(T: Pred) -> bool:
    """T hereditário em todo |u| < d implica ⟨⟩ ∈ T"""
    return T.has_rank(0) or not is_hereditary(T)


# Pontos fixos


def pruning(T: Pred, boundary: Boundary = Boundary.OPEN) -> Pred:
    """
    Poda de T: maior ponto fixo de λu.(u ∈ T ∧ ∃a u⋆a ∈ X)

    Args:
        T (Pred): Predicado de entrada
        boundary (Boundary): Convenção nas folhas

    Returns:
        Pred: Maior ponto fixo, contido em T
    """
    tables = T.universe.tables
    leaf_ok = _leaf_exists_clause(boundary)
    current = T.mask
    while True:
        nxt = 0
        for i, children in enumerate(tables.children):
            if not current >> i & 1:
                continue
            if (not children and leaf_ok) or any(current >> c & 1 for c in children):
                nxt |= 1 << i
        if nxt == current:
            return Pred(T.universe, current)
        current = nxt


def hereditary_closure(T: Pred, boundary: Boundary = Boundary.OPEN) -> Pred:
    """
    Fecho hereditário de T: menor ponto fixo de λu.(u ∈ T ∨ ∀a u⋆a ∈ X)

    Args:
        T (Pred): Predicado de entrada
        boundary (Boundary): Convenção nas folhas

    Returns:
        Pred: Menor ponto fixo, contendo T
    """
    tables = T.universe.tables
    leaf_in = _leaf_forall_clause(boundary)
    current = T.mask
    while True:
        nxt = current
        for i, children in enumerate(tables.children):
            if nxt >> i & 1:
                continue
            if (not children and leaf_in) or (
                children and all(current >> c & 1 for c in children)
            ):
                nxt |= 1 << i
        if nxt == current:
            return Pred(T.universe, current)
        current = nxt


def is_productive(T: Pred, boundary: Boundary = Boundary.OPEN) -> bool:
    return pruning(T, boundary).has_rank(0)


def is_inductively_barred(T: Pred, boundary: Boundary = Boundary.OPEN) -> bool:
    return hereditary_closure(T, boundary).has_rank(0)


# Buscas de ramos


def _chain_from(mask: int, universe: Universe, start: int) -> Optional[Tuple[int, ...]]:
    """Caminho de start até uma folha com todos os nós em mask"""
    if not mask >> start & 1:
        return None
    tables = universe.tables
    children = tables.children[start]
    if not children:
        return ()
    for a, c in enumerate(children):
        rest = _chain_from(mask, universe, c)
        if rest is not None:
            return (a,) + rest
    return None


def _avoiding_from(
    mask: int, universe: Universe, start: int
) -> Optional[Tuple[int, ...]]:
    """Caminho de start até uma folha sem nenhum nó em mask"""
    if mask >> start & 1:
        return None
    children = universe.tables.children[start]
    if not children:
        return ()
    for a, c in enumerate(children):
        rest = _avoiding_from(mask, universe, c)
        if rest is not None:
            return (a,) + rest
    return None


def _level_below(universe: Universe, start: int, n: int) -> int:
    tables = universe.tables
    level = tables.lengths[start] + n
    return tables.ext_mask[start] & tables.level_mask[level]


def find_branch(T: Pred) -> Optional[Branch]:
    """Ramo α ∈ B^d com todos os prefixos em T"""
    values = _chain_from(T.mask, T.universe, 0)
    return None if values is None else Branch(T.universe.alphabet, values)


def find_unbarred_branch(T: Pred) -> Optional[Branch]:
    """Ramo α ∈ B^d sem nenhum prefixo em T"""
    values = _avoiding_from(T.mask, T.universe, 0)
    return None if values is None else Branch(T.universe.alphabet, values)


# Variantes relativizadas


def productive_from(T: Pred, u: SeqU, boundary: Boundary = Boundary.OPEN) -> bool:
    return pruning(T, boundary).has_rank(T.universe.rank(u))


def inductively_barred_from(
    T: Pred, u: SeqU, boundary: Boundary = Boundary.OPEN
) -> bool:
    return hereditary_closure(T, boundary).has_rank(T.universe.rank(u))


def unbounded_from(T: Pred, u: SeqU) -> bool:
    """∀n ≤ d-|u| ∃u' |u'| = n ∧ u@u' ∈ ⌄T"""
    universe = T.universe
    start = universe.rank(u)
    down = down_arborify(T).mask
    return all(
        _level_below(universe, start, n) & down
        for n in range(universe.depth - len(u) + 1)
    )


def uniformly_barred_from(T: Pred, u: SeqU) -> bool:
    """∃n ≤ d-|u| ∀u' |u'| = n ⇒ u@u' ∈ ↑T"""
    return _uniform_level(T, T.universe.rank(u)) is not None


def _uniform_level(T: Pred, start: int) -> Optional[int]:
    universe = T.universe
    up = up_monotonise(T).mask
    for n in range(universe.depth - universe.tables.lengths[start] + 1):
        level = _level_below(universe, start, n)
        if level & up == level:
            return n
    return None


def branch_from(T: Pred, u: SeqU) -> bool:
    """∃α ∈ B^(d-|u|) ∀u' ≺ α: u@u' ∈ T"""
    return _chain_from(T.mask, T.universe, T.universe.rank(u)) is not None


def barred_from(T: Pred, u: SeqU) -> bool:
    """∀α ∈ B^(d-|u|) ∃u' ≺ α: u@u' ∈ T"""
    return _avoiding_from(T.mask, T.universe, T.universe.rank(u)) is None


# Propriedades na raiz


def has_unbounded_paths(T: Pred) -> bool:
    return unbounded_from(T, SeqU.empty(T.universe.alphabet))


def is_uniformly_barred(T: Pred) -> bool:
    return _uniform_level(T, 0) is not None


def is_staged_infinite(T: Pred) -> bool:
    """∀n ≤ d ∃u |u| = n ∧ u ∈ T"""
    levels = T.universe.tables.level_mask
    return all(level & T.mask for level in levels)


def _staged_level(T: Pred) -> Optional[int]:
    for n, level in enumerate(T.universe.tables.level_mask):
        if level & T.mask == level:
            return n
    return None


def is_staged_barred(T: Pred) -> bool:
    """∃n ≤ d ∀u |u| = n ⇒ u ∈ T"""
    return _staged_level(T) is not None


def has_infinite_branch(T: Pred) -> bool:
    return _chain_from(T.mask, T.universe, 0) is not None


def is_barred(T: Pred) -> bool:
    return _avoiding_from(T.mask, T.universe, 0) is None


def classify(T: Pred, boundary: Boundary = Boundary.OPEN) -> Dict[str, FoundReport]:
    """
    Classificação completa de T com testemunhas

    Args:
        T (Pred): Predicado a classificar
        boundary (Boundary): Convenção nas folhas para os pontos fixos

    Returns:
        Dict[str, FoundReport]: Um veredito por propriedade, em ordem fixa
    """
    universe = T.universe
    reports: Dict[str, FoundReport] = {}

    failing = next(
        (
            universe.node(i)
            for i in _inner_ranks(universe)
            if T.has_rank(i)
            and not any(T.has_rank(c) for c in universe.tables.children[i])
        ),
        None,
    )
    spread = is_spread(T)
    if spread:
        spread_witness = None
    elif not T.has_rank(0):
        spread_witness = SeqU.empty(universe.alphabet)
    else:
        spread_witness = failing
    reports["spread"] = FoundReport("spread", spread, spread_witness)
    reports["barricaded"] = FoundReport(
        "barricaded", is_barricaded(T), detail={"hereditary": is_hereditary(T)}
    )

    pruned = pruning(T, boundary)
    productive = pruned.has_rank(0)
    reports["productive"] = FoundReport(
        "productive",
        productive,
        find_branch(pruned) if productive else None,
        table=pruned,
    )
    closure = hereditary_closure(T, boundary)
    reports["inductively_barred"] = FoundReport(
        "inductively_barred", closure.has_rank(0), table=closure
    )

    down = down_arborify(T)
    deepest = down.mask & universe.tables.level_mask[universe.depth]
    unbounded = has_unbounded_paths(T)
    if unbounded:
        unbounded_witness: Any = universe.node((deepest & -deepest).bit_length() - 1)
    else:
        unbounded_witness = next(
            n
            for n, level in enumerate(universe.tables.level_mask)
            if not level & down.mask
        )
    reports["unbounded_paths"] = FoundReport(
        "unbounded_paths", unbounded, unbounded_witness
    )
    uniform = _uniform_level(T, 0)
    reports["uniformly_barred"] = FoundReport(
        "uniformly_barred", uniform is not None, uniform
    )

    staged_infinite = is_staged_infinite(T)
    reports["staged_infinite"] = FoundReport(
        "staged_infinite",
        staged_infinite,
        None
        if staged_infinite
        else next(
            n
            for n, level in enumerate(universe.tables.level_mask)
            if not level & T.mask
        ),
    )
    staged = _staged_level(T)
    reports["staged_barred"] = FoundReport("staged_barred", staged is not None, staged)

    branch = find_branch(T)
    reports["infinite_branch"] = FoundReport(
        "infinite_branch", branch is not None, branch
    )
    unbarred = find_unbarred_branch(T)
    reports["barred"] = FoundReport(
        "barred", unbarred is None, uniform if unbarred is None else unbarred
    )
    return reports


def verify_witness(T: Pred, report: FoundReport) -> bool:
    """
    Reavalia a testemunha de um relatório

    Args:
        T (Pred): Predicado original
        report (FoundReport): Relatório produzido por classify ou check_principle

    Returns:
        bool: True se a testemunha certifica o veredito (ou se não há testemunha)
    """
    witness = report.witness
    universe = T.universe
    if witness is None:
        return True
    if isinstance(witness, Branch):
        prefixes_in = [u in T for u in witness.prefixes()]
        if report.property == "barred" or report.detail.get("side") == _WELL:
            return witness.depth == universe.depth and not any(prefixes_in)
        return witness.depth == universe.depth and all(prefixes_in)
    if isinstance(witness, SeqU):
        if report.property == "unbounded_paths":
            return len(witness) == universe.depth and witness in down_arborify(T)
        if report.property == "spread":
            return witness not in T or not progressing_at(T, witness)
        return witness in T
    if isinstance(witness, int):
        level = universe.tables.level_mask[witness]
        if report.property in ("uniformly_barred", "barred"):
            up = up_monotonise(T).mask
            return level & up == level
        if report.property == "staged_barred":
            return level & T.mask == level
        if report.property == "staged_infinite":
            return not level & T.mask
        if report.property == "unbounded_paths":
            return not level & down_arborify(T).mask
    return False


# Princípios


@dataclass(frozen=True)
class _Principle:
    hypothesis: Callable[[Pred, Boundary], bool]
    conclusion: Callable[[Pred, Boundary], bool]
    side: str


def _branch(T: Pred, boundary: Boundary) -> bool:
    return has_infinite_branch(T)


_ILL = "má fundação"
_WELL = "boa fundação"

PRINCIPLES: Dict[str, _Principle] = {
    "DC^spread": _Principle(lambda T, b: is_spread(T), _branch, _ILL),
    "DC^productive": _Principle(is_productive, _branch, _ILL),
    "BI^barricaded": _Principle(
        lambda T, b: is_barred(T), lambda T, b: is_barricaded(T), _WELL
    ),
    "BI^ind": _Principle(lambda T, b: is_barred(T), is_inductively_barred, _WELL),
    "KL^spread": _Principle(lambda T, b: is_spread(T), _branch, _ILL),
    "KL^productive": _Principle(is_productive, _branch, _ILL),
    "KL^unbounded": _Principle(lambda T, b: has_unbounded_paths(T), _branch, _ILL),
    "KL^staged": _Principle(
        lambda T, b: is_tree(T) and is_staged_infinite(T), _branch, _ILL
    ),
    "FT^barricaded": _Principle(
        lambda T, b: is_barred(T), lambda T, b: is_barricaded(T), _WELL
    ),
    "FT^ind": _Principle(lambda T, b: is_barred(T), is_inductively_barred, _WELL),
    "FT^uniform": _Principle(
        lambda T, b: is_barred(T), lambda T, b: is_uniformly_barred(T), _WELL
    ),
    "FT^staged": _Principle(
        lambda T, b: is_monotone(T) and is_barred(T),
        lambda T, b: is_staged_barred(T),
        _WELL,
    ),
}


def check_principle(
    name: str, T: Pred, boundary: Boundary = Boundary.OPEN
) -> FoundReport:
    """
    Avalia hipótese ⇒ conclusão de um princípio sobre T na profundidade d

    Args:
        name (str): Nome do princípio (ex.: "DC^spread", "FT^uniform")
        T (Pred): Predicado
        boundary (Boundary): Convenção nas folhas

    Returns:
        FoundReport: Veredito com testemunha (ramo) ou contraexemplo
    """
    principle = PRINCIPLES.get(name)
    if principle is None:
        raise UnknownPrincipleError(f"Princípio desconhecido: {name}")
    hypothesis = principle.hypothesis(T, boundary)
    conclusion = principle.conclusion(T, boundary)
    witness: Optional[Union[Branch, int]] = None
    if principle.side == _ILL:
        witness = find_branch(T)
    elif not conclusion:
        witness = find_unbarred_branch(T)
    return FoundReport(
        name,
        (not hypothesis) or conclusion,
        witness,
        detail={
            "hypothesis": hypothesis,
            "conclusion": conclusion,
            "side": principle.side,
            "logic": "co-intuicionista" if principle.side == _ILL else "intuicionista",
            "reading": "clássica, profundidade finita",
        },
    )


# Árvores intensionais


@dataclass(frozen=True)
class Leaf:
    pass


@dataclass(frozen=True)
class Node:
    children: Tuple[Any, ...]


ITree = Union[Leaf, Node]


def itree_height(t: ITree) -> int:
    if isinstance(t, Leaf):
        return 0
    return 1 + max((itree_height(c) for c in t.children), default=0)


def _check_arity(t: ITree, alphabet: Alphabet) -> None:
    if isinstance(t, Node):
        if len(t.children) != alphabet.size:
            raise InvalidArgumentsError(
                f"Nó com {len(t.children)} filhos sobre alfabeto "
                f"de tamanho {alphabet.size}"
            )
        for c in t.children:
            _check_arity(c, alphabet)


def itree_to_extensional(t: ITree, universe: Universe) -> Pred:
    """
    Predicado T(t): ⟨⟩ ∈ T(Node(f)) e a@u' ∈ T(Node(f)) se u' ∈ T(f(a))

    Exige altura <= d: toda folha de t cai dentro do universo, e T(t) sai de
    todo ramo de profundidade d

    Args:
        t (ITree): Árvore intensional
        universe (Universe): Universo de destino

    Returns:
        Pred: Versão extensional da árvore
    """
    _check_arity(t, universe.alphabet)
    height = itree_height(t)
    if height > universe.depth:
        raise DepthMismatchError(
            f"Árvore de altura {height} não cabe no universo "
            f"de profundidade {universe.depth}"
        )
    tables = universe.tables
    mask = 0
    stack: List[Tuple[ITree, int]] = [(t, 0)]
    while stack:
        node, i = stack.pop()
        if isinstance(node, Node):
            mask |= 1 << i
            for child, c in zip(node.children, tables.children[i]):
                stack.append((child, c))
    return Pred(universe, mask)


def realises(t: ITree, T: Pred) -> bool:
    """Folha realiza T se ⟨⟩ ∉ T; Node(f) realiza T se ⟨⟩ ∈ T e cada f(a) realiza T_a"""
    _check_arity(t, T.universe.alphabet)
    tables = T.universe.tables

    def go(node: ITree, i: Optional[int]) -> bool:
        # i None: sequência fora do universo, tratada como não membro
        member = i is not None and T.has_rank(i)
        if isinstance(node, Leaf):
            return not member
        if not member:
            return False
        children = tables.children[i] if i is not None else ()
        return all(
            go(child, children[a] if children else None)
            for a, child in enumerate(node.children)
        )

    return go(t, 0)


def all_itrees(alphabet: Alphabet, height: int) -> List[ITree]:
    """Todas as árvores intensionais de altura <= height"""
    trees: List[ITree] = [Leaf()]
    for _ in range(height):
        trees = [Leaf()] + [
            Node(children)
            for children in itertools.product(trees, repeat=alphabet.size)
        ]
    return trees


def is_well_founded_at(t: ITree, universe: Universe) -> bool:
    """Todo ramo de profundidade d sai de T(t) em algum prefixo"""
    return is_barred(itree_to_extensional(t, universe).complement())


def iter_principles() -> Iterator[str]:
    return iter(PRINCIPLES)
