"""
Módulo de aproximações finitas de funções A ⇀ B

Aproximações são conjuntos de pares (a, b) ordenados por inclusão; o
representante canônico de uma classe é a tupla ordenada sem repetições.
Os motores de ponto fixo memorizam sobre esse representante.
"""

import itertools
import logging
from dataclasses import dataclass, field
from typing import (
    Callable,
    Dict,
    FrozenSet,
    Iterable,
    Iterator,
    List,
    Optional,
    Set,
    Tuple,
)

from wellfound.errors import InvalidArgumentsError, SizeLimitError
from wellfound.foundkit import FoundReport
from wellfound.predkit import Pred, Universe
from wellfound.relkit import HetRel, find_escape, is_grounded, is_left_total
from wellfound.seqcore import Alphabet, SeqU

logger = logging.getLogger(__name__)

Pair = Tuple[int, int]
Key = Tuple[Pair, ...]

# Limite de |A|·|B| para enumerar todas as aproximações canônicas
MAX_PAIRS = 16


@dataclass(frozen=True)
class Approx:
    """Aproximação finita: sequência de pares (a, b), repetições permitidas"""

    pairs: Tuple[Pair, ...] = ()

    @classmethod
    def of(cls, *pairs: Pair) -> "Approx":
        return cls(tuple(pairs))

    def key(self) -> Key:
        return tuple(sorted(set(self.pairs)))

    def canonical(self) -> "Approx":
        return Approx(self.key())

    def dom(self) -> FrozenSet[int]:
        return frozenset(a for a, _ in self.pairs)

    def is_functional(self) -> bool:
        return len(self.dom()) == len(set(self.pairs))

    def extend(self, a: int, b: int) -> "Approx":
        return Approx(self.pairs + ((a, b),))

    def issubset(self, other: "Approx") -> bool:
        return set(self.pairs) <= set(other.pairs)

    def equivalent(self, other: "Approx") -> bool:
        """v ~ v'"""
        return set(self.pairs) == set(other.pairs)

    def precedes(self, alpha: "ChoiceFun") -> bool:
        """v ≺ α: α(a) = b para todo par de v"""
        return all(
            a < len(alpha.values) and alpha.values[a] == b for a, b in self.pairs
        )

    def __len__(self) -> int:
        return len(self.pairs)

    def __str__(self) -> str:
        return "⟨" + ",".join(f"({a},{b})" for a, b in self.pairs) + "⟩"


@dataclass(frozen=True)
class ChoiceFun:
    """Função total α : A → B"""

    codomain: Alphabet
    values: Tuple[int, ...]

    def __post_init__(self):
        for b in self.values:
            self.codomain.check(b)

    def __call__(self, a: int) -> int:
        return self.values[a]

    def graph(self) -> Approx:
        return Approx(tuple(enumerate(self.values)))

    def __str__(self) -> str:
        return "[" + ",".join(str(b) for b in self.values) + "]"


@dataclass(frozen=True, eq=False)
class ApproxPred:
    """
    Predicado sobre aproximações de A × B, invariante por ~

    Args:
        domain_size (int): |A|
        codomain (Alphabet): B
        oracle (Callable): Pertinência sobre chaves canônicas
        table (Optional[FrozenSet]): Tabela explícita de membros, quando conhecida
    """

    domain_size: int
    codomain: Alphabet
    oracle: Callable[[Key], bool]
    table: Optional[FrozenSet[Key]] = None
    _memo: Dict[Key, bool] = field(default_factory=dict, repr=False)

    @classmethod
    def from_table(
        cls, domain_size: int, codomain: Alphabet, members: Iterable[Approx]
    ) -> "ApproxPred":
        table = frozenset(v.key() for v in members)
        return cls(domain_size, codomain, table.__contains__, table)

    @classmethod
    def full(cls, domain_size: int, codomain: Alphabet) -> "ApproxPred":
        return cls(domain_size, codomain, lambda key: True)

    def contains_key(self, key: Key) -> bool:
        cached = self._memo.get(key)
        if cached is None:
            cached = bool(self.oracle(key))
            self._memo[key] = cached
        return cached

    def __contains__(self, v: Approx) -> bool:
        return self.contains_key(v.key())

    def pairs(self) -> List[Pair]:
        return [
            (a, b) for a in range(self.domain_size) for b in self.codomain.elements()
        ]

    def members(self) -> List[Key]:
        """Todos os membros canônicos (enumeração limitada a |A|·|B| <= MAX_PAIRS)"""
        if self.table is not None:
            return sorted(self.table)
        return [key for key in all_keys(self) if self.contains_key(key)]

    def complement(self) -> "ApproxPred":
        return ApproxPred(
            self.domain_size, self.codomain, lambda key: not self.contains_key(key)
        )


def all_keys(T: ApproxPred) -> Iterator[Key]:
    """Todas as aproximações canônicas de A × B"""
    pairs = T.pairs()
    if len(pairs) > MAX_PAIRS:
        raise SizeLimitError(
            f"|A|·|B| = {len(pairs)} excede o limite de enumeração {MAX_PAIRS}"
        )
    for r in range(len(pairs) + 1):
        yield from itertools.combinations(pairs, r)


def functional_keys(domain_size: int, codomain: Alphabet) -> List[Key]:
    """Todas as funções parciais A ⇀ B, como chaves canônicas"""
    keys = []
    for choice in itertools.product(range(-1, codomain.size), repeat=domain_size):
        keys.append(tuple((a, b) for a, b in enumerate(choice) if b >= 0))
    return keys


def _subsets(key: Key) -> Iterator[Key]:
    for r in range(len(key) + 1):
        yield from itertools.combinations(key, r)


def _add(key: Key, pair: Pair) -> Key:
    if pair in key:
        return key
    return tuple(sorted(key + (pair,)))


def _dom(key: Key) -> Set[int]:
    return {a for a, _ in key}


class _Engine:
    """Memorização de ⌄T e ↑T para um predicado"""

    def __init__(self, T: ApproxPred):
        self.T = T
        self.down: Dict[Key, bool] = {}
        self.up: Dict[Key, bool] = {}

    def in_down(self, key: Key) -> bool:
        cached = self.down.get(key)
        if cached is None:
            cached = all(self.T.contains_key(s) for s in _subsets(key))
            self.down[key] = cached
        return cached

    def in_up(self, key: Key) -> bool:
        cached = self.up.get(key)
        if cached is None:
            cached = any(self.T.contains_key(s) for s in _subsets(key))
            self.up[key] = cached
        return cached


def approximable_from(T: ApproxPred, v: Approx) -> bool:
    """
    νX.λv.(v ∈ ⌄T ∧ ∀a ∉ dom(v) ∃b v⋆(a,b) ∈ X)

    Args:
        T (ApproxPred): Predicado sobre aproximações
        v (Approx): Aproximação inicial

    Returns:
        bool: Veredito do maior ponto fixo
    """
    _check_domain(T, v)
    engine = _Engine(T)
    memo: Dict[Key, bool] = {}
    codomain = list(T.codomain.elements())

    def go(key: Key) -> bool:
        if key in memo:
            return memo[key]
        result = engine.in_down(key)
        if result:
            dom = _dom(key)
            result = all(
                any(go(_add(key, (a, b))) for b in codomain)
                for a in range(T.domain_size)
                if a not in dom
            )
        memo[key] = result
        return result

    return go(v.key())


def approximable(T: ApproxPred) -> bool:
    return approximable_from(T, Approx())


def approximable_up_to(T: ApproxPred, k: int) -> bool:
    """Ponto fixo ν truncado: só exige extensões enquanto |dom(v)| < k"""
    engine = _Engine(T)
    memo: Dict[Key, bool] = {}
    codomain = list(T.codomain.elements())

    def go(key: Key) -> bool:
        if key in memo:
            return memo[key]
        dom = _dom(key)
        result = engine.in_down(key)
        if result and len(dom) < k:
            result = all(
                any(go(_add(key, (a, b))) for b in codomain)
                for a in range(T.domain_size)
                if a not in dom
            )
        memo[key] = result
        return result

    return go(())


@dataclass(frozen=True)
class BarDerivation:
    """Derivação de barra indutiva: acerto em ↑T ou divisão no índice split"""

    approx: Approx
    split: Optional[int] = None
    children: Tuple["BarDerivation", ...] = ()

    def size(self) -> int:
        return 1 + sum(c.size() for c in self.children)


def bar_derivation(T: ApproxPred, v: Approx) -> Optional[BarDerivation]:
    """
    μX.λv.(v ∈ ↑T ∨ ∃a ∉ dom(v) ∀b v⋆(a,b) ∈ X), com testemunha

    Args:
        T (ApproxPred): Predicado sobre aproximações
        v (Approx): Aproximação inicial

    Returns:
        Optional[BarDerivation]: Derivação, escolhendo o menor índice que funciona
    """
    _check_domain(T, v)
    engine = _Engine(T)
    memo: Dict[Key, Optional[BarDerivation]] = {}
    codomain = list(T.codomain.elements())

    def go(key: Key) -> Optional[BarDerivation]:
        if key in memo:
            return memo[key]
        result: Optional[BarDerivation] = None
        if engine.in_up(key):
            result = BarDerivation(Approx(key))
        else:
            dom = _dom(key)
            for a in range(T.domain_size):
                if a in dom:
                    continue
                subs = []
                for b in codomain:
                    sub = go(_add(key, (a, b)))
                    if sub is None:
                        break
                    subs.append(sub)
                else:
                    result = BarDerivation(Approx(key), a, tuple(subs))
                    break
        memo[key] = result
        return result

    return go(v.key())


def inductively_barred_from(T: ApproxPred, v: Approx) -> bool:
    return bar_derivation(T, v) is not None


def inductively_barred(T: ApproxPred) -> bool:
    return inductively_barred_from(T, Approx())


def check_bar_derivation(T: ApproxPred, derivation: BarDerivation) -> bool:
    """Reverifica cada nó: folhas em ↑T, divisões cobrindo todo b com índice novo"""
    key = derivation.approx.key()
    if derivation.split is None:
        return any(T.contains_key(s) for s in _subsets(key))
    a = derivation.split
    if a in _dom(key) or a >= T.domain_size:
        return False
    if len(derivation.children) != T.codomain.size:
        return False
    return all(
        child.approx.key() == _add(key, (a, b)) and check_bar_derivation(T, child)
        for b, child in enumerate(derivation.children)
    )


def find_choice_function(T: ApproxPred) -> Optional[ChoiceFun]:
    """
    Busca α com todo v ≺ α em T, podando por atribuições parciais

    Args:
        T (ApproxPred): Predicado sobre aproximações

    Returns:
        Optional[ChoiceFun]: Função escolha ou None
    """
    engine = _Engine(T)
    codomain = list(T.codomain.elements())

    def go(key: Key, a: int) -> Optional[Tuple[int, ...]]:
        if not engine.in_down(key):
            return None
        if a == T.domain_size:
            return ()
        for b in codomain:
            rest = go(key + ((a, b),), a + 1)
            if rest is not None:
                return (b,) + rest
        return None

    values = go((), 0)
    return None if values is None else ChoiceFun(T.codomain, values)


def find_unbarred_function(T: ApproxPred) -> Optional[ChoiceFun]:
    """α sem nenhum v ≺ α em T"""
    engine = _Engine(T)
    codomain = list(T.codomain.elements())

    def go(key: Key, a: int) -> Optional[Tuple[int, ...]]:
        if engine.in_up(key):
            return None
        if a == T.domain_size:
            return ()
        for b in codomain:
            rest = go(key + ((a, b),), a + 1)
            if rest is not None:
                return (b,) + rest
        return None

    values = go((), 0)
    return None if values is None else ChoiceFun(T.codomain, values)


def is_choice_function(T: ApproxPred, alpha: ChoiceFun) -> bool:
    return all(T.contains_key(s) for s in _subsets(alpha.graph().key()))


def barred(T: ApproxPred) -> bool:
    """∀α ∃v ≺ α: v ∈ T"""
    return find_unbarred_function(T) is None


def all_choice_functions(domain_size: int, codomain: Alphabet) -> Iterator[ChoiceFun]:
    for values in itertools.product(codomain.elements(), repeat=domain_size):
        yield ChoiceFun(codomain, values)


def check_GDC(T: ApproxPred) -> FoundReport:
    """Aproximável ⇒ tem função escolha"""
    hypothesis = approximable(T)
    alpha = find_choice_function(T)
    return FoundReport(
        "GDC",
        (not hypothesis) or alpha is not None,
        alpha,
        detail={"hypothesis": hypothesis, "conclusion": alpha is not None},
    )


def check_GBI(T: ApproxPred) -> FoundReport:
    """Barrado ⇒ indutivamente barrado"""
    escape = find_unbarred_function(T)
    derivation = bar_derivation(T, Approx())
    return FoundReport(
        "GBI",
        escape is not None or derivation is not None,
        derivation if derivation is not None else escape,
        detail={"hypothesis": escape is None, "conclusion": derivation is not None},
    )


def _check_domain(T: ApproxPred, v: Approx) -> None:
    for a, b in v.pairs:
        if a < 0 or a >= T.domain_size:
            raise InvalidArgumentsError(
                f"Índice {a} fora do domínio de tamanho {T.domain_size}"
            )
        T.codomain.check(b)


# Codificações sequenciais


def ord_approx(u: SeqU) -> Approx:
    """ord(u ⋆ b) = ord(u) ⋆ (|u|, b)"""
    return Approx(tuple(enumerate(u.items)))


def _check_ordered(T: ApproxPred, universe: Universe) -> None:
    if T.domain_size < universe.depth:
        raise InvalidArgumentsError(
            f"Domínio {T.domain_size} menor que a profundidade {universe.depth}"
        )
    if T.codomain != universe.alphabet:
        raise InvalidArgumentsError("Codomínio difere do alfabeto do universo")


def ordered(T: ApproxPred, universe: Universe) -> Pred:
    """‖T‖: u ∈ ‖T‖ sse ord(u) ∈ T"""
    _check_ordered(T, universe)
    mask = 0
    for i, items in enumerate(universe.tables.nodes):
        if T.contains_key(tuple(enumerate(items))):
            mask |= 1 << i
    return Pred(universe, mask)


def lift(T: Pred) -> ApproxPred:
    """v ∈ lift(T) sse v ~ ord(u) para algum u ∈ T"""
    universe = T.universe
    return ApproxPred.from_table(
        universe.depth,
        universe.alphabet,
        (ord_approx(u) for u in T.members()),
    )


def _closure(
    T: ApproxPred,
    keep: Callable[[FrozenSet[Pair], List[FrozenSet[Pair]]], bool],
    members: Iterable[Key],
) -> ApproxPred:
    sets = [frozenset(m) for m in members]
    return ApproxPred(
        T.domain_size, T.codomain, lambda key: keep(frozenset(key), sets)
    )


def approx_up_arborify(T: ApproxPred) -> ApproxPred:
    """v ↦ ∃v' ⊇ v, v' ∈ T"""
    return _closure(T, lambda v, ms: any(v <= m for m in ms), T.members())


def approx_up_monotonise(T: ApproxPred) -> ApproxPred:
    """v ↦ ∃v' ⊆ v, v' ∈ T"""
    return _closure(T, lambda v, ms: any(m <= v for m in ms), T.members())


def approx_down_arborify(T: ApproxPred) -> ApproxPred:
    """v ↦ ∀v' ⊆ v, v' ∈ T"""
    return ApproxPred(
        T.domain_size,
        T.codomain,
        lambda key: all(T.contains_key(s) for s in _subsets(key)),
    )


def approx_down_monotonise(T: ApproxPred) -> ApproxPred:
    """v ↦ ∀v' ⊇ v (dentro de A × B), v' ∈ T"""
    outside = [key for key in all_keys(T) if not T.contains_key(key)]
    return _closure(T, lambda v, ms: not any(v <= m for m in ms), outside)


# Alinhamentos de relações e escolha


def relation_alignment(R: HetRel) -> ApproxPred:
    """R_⊤: todos os pares de v satisfazem R"""
    return ApproxPred(
        R.domain_size, R.codomain, lambda key: all(R.holds(a, b) for a, b in key)
    )


def negative_relation_alignment(R: HetRel) -> ApproxPred:
    """R_⊥: algum par de v satisfaz R"""
    return ApproxPred(
        R.domain_size, R.codomain, lambda key: any(R.holds(a, b) for a, b in key)
    )


def check_AC(R: HetRel) -> FoundReport:
    """R total à esquerda ⇒ função escolha, comparado com GDC sobre R_⊤"""
    aligned = relation_alignment(R)
    total = is_left_total(R)
    gdc = check_GDC(aligned)
    solutions = {
        alpha.values
        for alpha in all_choice_functions(R.domain_size, R.codomain)
        if all(R.holds(a, b) for a, b in enumerate(alpha.values))
    }
    choice_functions = {
        alpha.values
        for alpha in all_choice_functions(R.domain_size, R.codomain)
        if is_choice_function(aligned, alpha)
    }
    holds = (not total) or bool(solutions)
    return FoundReport(
        "AC",
        holds,
        gdc.witness,
        detail={
            "hypothesis": total,
            "conclusion": bool(solutions),
            "gdc_agrees": gdc.holds == holds,
            "approximable_agrees": total == gdc.detail["hypothesis"],
            "choice_functions_agree": solutions == choice_functions,
        },
    )


def check_coAC(R: HetRel) -> FoundReport:
    """R barrada ⇒ R fundamentada, comparado com GBI sobre R_⊥"""
    negative = negative_relation_alignment(R)
    is_barred = find_escape(R) is None
    grounded = is_grounded(R)
    gbi = check_GBI(negative)
    holds = (not is_barred) or grounded
    return FoundReport(
        "coAC",
        holds,
        gbi.witness,
        detail={
            "hypothesis": is_barred,
            "conclusion": grounded,
            "gbi_agrees": gbi.holds == holds,
            "barred_agrees": is_barred == gbi.detail["hypothesis"],
        },
    )


# Demonstração de inconsistência em miniatura


def injectivity(m: int, n: int) -> ApproxPred:
    """v ∈ T sse nenhum valor aparece com dois argumentos distintos"""

    def oracle(key: Key) -> bool:
        seen: Dict[int, int] = {}
        for a, b in key:
            if seen.setdefault(b, a) != a:
                return False
        return True

    return ApproxPred(m, Alphabet(n), oracle)


@dataclass(frozen=True)
class PigeonholeReport:
    m: int
    n: int
    max_size: int
    choice_function: Optional[ChoiceFun]
    narrative: str


def pigeonhole_demo(m: int, n: int) -> PigeonholeReport:
    """
    Predicado de injetividade com |A| = m > |B| = n

    Args:
        m (int): Tamanho do domínio
        n (int): Tamanho do codomínio

    Returns:
        PigeonholeReport: Maior k aproximável, ausência de função escolha e narrativa
    """
    if n < 1 or m <= n:
        raise InvalidArgumentsError(f"Exige m > n >= 1, recebido m={m}, n={n}")
    T = injectivity(m, n)
    max_size = max(k for k in range(m + 1) if approximable_up_to(T, k))
    alpha = find_choice_function(T)
    narrative = (
        f"Toda aproximação injetiva com domínio de tamanho até {max_size} se estende, "
        f"mas com {m} argumentos e {n} valores a extensão seguinte sempre colide: "
        f"não há função escolha injetiva. Com codomínio infinito o ponto fixo ν "
        f"nunca falharia em profundidade finita, e é esse descompasso que torna "
        f"inconsistente a escolha generalizada sobre filtros de injetividade."
    )
    logger.info(f"Demonstração pigeonhole m={m} n={n}: k={max_size}")
    return PigeonholeReport(m, n, max_size, alpha, narrative)


# Experimento: codomínio de tamanho 3 codificado em bits


def binary_encoding(T: ApproxPred) -> ApproxPred:
    """
    Codifica T sobre B = 3 como predicado sobre 2|A| bits

    O índice a vira os bits 2a (alto) e 2a+1 (baixo); o código 11 é inválido.
    Pares cujo par de bits não está completo são ignorados na decodificação.
    """
    if T.codomain.size != 3:
        raise InvalidArgumentsError(
            "A codificação binária exige codomínio de tamanho 3"
        )

    def oracle(key: Key) -> bool:
        bits: Dict[int, int] = {}
        for i, bit in key:
            if bits.setdefault(i, bit) != bit:
                return False
        decoded = []
        for a in range(T.domain_size):
            high, low = bits.get(2 * a), bits.get(2 * a + 1)
            if high is None or low is None:
                continue
            value = 2 * high + low
            if value == 3:
                return False
            decoded.append((a, value))
        return T.contains_key(tuple(decoded))

    return ApproxPred(2 * T.domain_size, Alphabet(2), oracle)


def encoding_agreement(T: ApproxPred) -> Dict[str, bool]:
    """Compara aproximabilidade e existência de função escolha nas duas versões"""
    encoded = binary_encoding(T)
    return {
        "approximable": approximable(T),
        "approximable_encoded": approximable(encoded),
        "choice": find_choice_function(T) is not None,
        "choice_encoded": find_choice_function(encoded) is not None,
    }
