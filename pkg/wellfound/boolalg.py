"""
Módulo da álgebra booleana livre sobre geradores finitos

Cada elemento é representado pela tabela-verdade completa (2^|A| bits): a
valoração k atribui ao gerador i o bit i de k. Sobre essa forma canônica são
construídos o filtro F_T e o ideal I_T de uma teoria, filtros gerados por
saturação, filtros primos vindos de modelos e as verificações BPF/BPI.
"""

import functools
import itertools
import logging
import re
from dataclasses import dataclass
from enum import Enum
from typing import (
    Callable,
    Dict,
    FrozenSet,
    Iterable,
    Iterator,
    List,
    Mapping,
    Optional,
    Tuple,
)

from wellfound.approxkit import approximable
from wellfound.entailkit import (
    ClauseTheory,
    Prover,
    Sequent,
    Valuation,
    all_valuations,
    theory_as_approx,
)
from wellfound.errors import (
    ExpressionParseError,
    GeneratorLimitError,
    InvalidArgumentsError,
    SizeLimitError,
)
from wellfound.foundkit import FoundReport

logger = logging.getLogger(__name__)

DEFAULT_MAX_GENERATORS = 16

# Camada exaustiva: 2^(2^3) = 256 elementos
EXHAUSTIVE_LIMIT = 3


# Expressões


class BoolExpr:
    """Árvore de expressão sobre geradores nomeados"""

    def __and__(self, other: "BoolExpr") -> "BoolExpr":
        return And(self, other)

    def __or__(self, other: "BoolExpr") -> "BoolExpr":
        return Or(self, other)

    def __invert__(self) -> "BoolExpr":
        return Not(self)

    def generators(self) -> FrozenSet[str]:
        raise NotImplementedError

    def evaluate(self, env: Mapping[str, int]) -> int:
        raise NotImplementedError


@dataclass(frozen=True)
class Var(BoolExpr):
    name: str

    def generators(self) -> FrozenSet[str]:
        return frozenset([self.name])

    def evaluate(self, env: Mapping[str, int]) -> int:
        return 1 if env[self.name] else 0

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class Top(BoolExpr):
    def generators(self) -> FrozenSet[str]:
        return frozenset()

    def evaluate(self, env: Mapping[str, int]) -> int:
        return 1

    def __str__(self) -> str:
        return "T"


@dataclass(frozen=True)
class Bottom(BoolExpr):
    def generators(self) -> FrozenSet[str]:
        return frozenset()

    def evaluate(self, env: Mapping[str, int]) -> int:
        return 0

    def __str__(self) -> str:
        return "F"


@dataclass(frozen=True)
class Not(BoolExpr):
    arg: BoolExpr

    def generators(self) -> FrozenSet[str]:
        return self.arg.generators()

    def evaluate(self, env: Mapping[str, int]) -> int:
        return 1 - self.arg.evaluate(env)

    def __str__(self) -> str:
        return f"!{_wrap(self.arg)}"


@dataclass(frozen=True)
class And(BoolExpr):
    left: BoolExpr
    right: BoolExpr

    def generators(self) -> FrozenSet[str]:
        return self.left.generators() | self.right.generators()

    def evaluate(self, env: Mapping[str, int]) -> int:
        return self.left.evaluate(env) & self.right.evaluate(env)

    def __str__(self) -> str:
        return f"{_wrap(self.left)} & {_wrap(self.right)}"


@dataclass(frozen=True)
class Or(BoolExpr):
    left: BoolExpr
    right: BoolExpr

    def generators(self) -> FrozenSet[str]:
        return self.left.generators() | self.right.generators()

    def evaluate(self, env: Mapping[str, int]) -> int:
        return self.left.evaluate(env) | self.right.evaluate(env)

    def __str__(self) -> str:
        return f"{_wrap(self.left)} | {_wrap(self.right)}"


def _wrap(e: BoolExpr) -> str:
    return f"({e})" if isinstance(e, (And, Or)) else str(e)


_TOKEN = re.compile(r"\s*(?:([A-Za-z_][A-Za-z0-9_]*)|(\S))")


def _tokenize(text: str) -> List[Tuple[str, int]]:
    tokens = []
    for m in _TOKEN.finditer(text):
        if m.group(1) is not None:
            tokens.append((m.group(1), m.start(1)))
        elif m.group(2) is not None:
            if m.group(2) not in "!&|()":
                raise ExpressionParseError(
                    f"Símbolo inesperado '{m.group(2)}'", m.start(2)
                )
            tokens.append((m.group(2), m.start(2)))
    return tokens


class _Parser:
    """Descida recursiva com precedência ! > & > |"""

    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self) -> Optional[str]:
        return self.tokens[self.pos][0] if self.pos < len(self.tokens) else None

    def position(self) -> int:
        if self.pos < len(self.tokens):
            return self.tokens[self.pos][1]
        return len(self.text)

    def advance(self) -> str:
        token = self.tokens[self.pos][0]
        self.pos += 1
        return token

    def parse(self) -> BoolExpr:
        if not self.tokens:
            raise ExpressionParseError("Expressão vazia", 0)
        e = self.parse_or()
        if self.peek() is not None:
            raise ExpressionParseError(
                f"Símbolo inesperado '{self.peek()}'", self.position()
            )
        return e

    def parse_or(self) -> BoolExpr:
        e = self.parse_and()
        while self.peek() == "|":
            self.advance()
            e = Or(e, self.parse_and())
        return e

    def parse_and(self) -> BoolExpr:
        e = self.parse_not()
        while self.peek() == "&":
            self.advance()
            e = And(e, self.parse_not())
        return e

    def parse_not(self) -> BoolExpr:
        if self.peek() == "!":
            self.advance()
            return Not(self.parse_not())
        return self.parse_atom()

    def parse_atom(self) -> BoolExpr:
        token = self.peek()
        if token is None:
            raise ExpressionParseError("Fim inesperado da expressão", self.position())
        if token == "(":
            self.advance()
            e = self.parse_or()
            if self.peek() != ")":
                raise ExpressionParseError("Esperado ')'", self.position())
            self.advance()
            return e
        if token in "&|)":
            raise ExpressionParseError(
                f"Símbolo inesperado '{token}'", self.position()
            )
        self.advance()
        if token == "T":
            return Top()
        if token == "F":
            return Bottom()
        return Var(token)


def parse_expr(text: str) -> BoolExpr:
    """
    Converte texto como `a & (b | !c) | T` em expressão

    Args:
        text (str): Expressão com `!`, `&`, `|`, `T`, `F`, parênteses e identificadores

    Returns:
        BoolExpr: Árvore da expressão
    """
    return _Parser(text).parse()


# Forma canônica


@dataclass(frozen=True)
class CanonExpr:
    """Tabela-verdade de um elemento da álgebra livre com `arity` geradores"""

    bits: int
    arity: int

    @property
    def rows(self) -> int:
        return 1 << self.arity

    @property
    def full(self) -> int:
        return (1 << self.rows) - 1

    def _same(self, other: "CanonExpr") -> None:
        if self.arity != other.arity:
            raise InvalidArgumentsError("Elementos de álgebras diferentes")

    def __and__(self, other: "CanonExpr") -> "CanonExpr":
        self._same(other)
        return CanonExpr(self.bits & other.bits, self.arity)

    def __or__(self, other: "CanonExpr") -> "CanonExpr":
        self._same(other)
        return CanonExpr(self.bits | other.bits, self.arity)

    def __invert__(self) -> "CanonExpr":
        return CanonExpr(self.full ^ self.bits, self.arity)

    def leq(self, other: "CanonExpr") -> bool:
        """b ⊢̇ b', isto é, b ∧̇ b' = b"""
        self._same(other)
        return self.bits & ~other.bits == 0

    def is_top(self) -> bool:
        return self.bits == self.full

    def is_bottom(self) -> bool:
        return self.bits == 0

    def value_at(self, k: int) -> int:
        return self.bits >> k & 1

    def evaluate(self, alpha: Valuation) -> int:
        k = sum(1 << i for i in range(self.arity) if alpha(i))
        return self.value_at(k)

    def falsifying_rows(self) -> Iterator[int]:
        """Valorações onde o elemento vale 0 (maxtermos da FNC canônica)"""
        for k in range(self.rows):
            if not self.value_at(k):
                yield k

    def to_text(self) -> str:
        """Bits da tabela, valoração 0 primeiro"""
        return "".join(str(self.value_at(k)) for k in range(self.rows))


def row_sequent(k: int, arity: int) -> Sequent:
    """Maxtermo da valoração k lido como sequente Γ_k ▷ Δ_k"""
    gamma = frozenset(i for i in range(arity) if k >> i & 1)
    return Sequent(gamma, frozenset(range(arity)) - gamma)


class FreeAlgebra:
    """
    Álgebra booleana livre sobre uma lista de geradores

    Args:
        generators (Iterable[str]): Nomes dos geradores, na ordem dos bits
        max_generators (int): Limite de geradores
    """

    def __init__(
        self, generators: Iterable[str], max_generators: int = DEFAULT_MAX_GENERATORS
    ):
        self.generators = tuple(generators)
        if len(set(self.generators)) != len(self.generators):
            raise InvalidArgumentsError("Geradores repetidos")
        if len(self.generators) > max_generators:
            raise GeneratorLimitError(
                f"{len(self.generators)} geradores excedem o limite {max_generators}"
            )
        self.arity = len(self.generators)
        self._index = {name: i for i, name in enumerate(self.generators)}

    @property
    def top(self) -> CanonExpr:
        return CanonExpr((1 << (1 << self.arity)) - 1, self.arity)

    @property
    def bottom(self) -> CanonExpr:
        return CanonExpr(0, self.arity)

    def generator(self, name: str) -> CanonExpr:
        if name not in self._index:
            raise InvalidArgumentsError(f"Gerador desconhecido: {name}")
        i = self._index[name]
        bits = 0
        for k in range(1 << self.arity):
            if k >> i & 1:
                bits |= 1 << k
        return CanonExpr(bits, self.arity)

    def canon(self, e: BoolExpr) -> CanonExpr:
        """
        Forma canônica de uma expressão

        Args:
            e (BoolExpr): Expressão sobre os geradores da álgebra

        Returns:
            CanonExpr: Tabela-verdade
        """
        if isinstance(e, Var):
            return self.generator(e.name)
        if isinstance(e, Top):
            return self.top
        if isinstance(e, Bottom):
            return self.bottom
        if isinstance(e, Not):
            return ~self.canon(e.arg)
        if isinstance(e, And):
            return self.canon(e.left) & self.canon(e.right)
        if isinstance(e, Or):
            return self.canon(e.left) | self.canon(e.right)
        raise InvalidArgumentsError(f"Expressão desconhecida: {e!r}")

    def clause(self, s: Sequent) -> CanonExpr:
        """(⋁¬Γ) ∨ (⋁Δ)"""
        result = self.bottom
        for i in s.gamma:
            result = result | ~self.generator(self.generators[i])
        for i in s.delta:
            result = result | self.generator(self.generators[i])
        return result

    def elements(self) -> Iterator[CanonExpr]:
        if self.arity > EXHAUSTIVE_LIMIT:
            raise SizeLimitError(
                f"Enumeração da álgebra limitada a {EXHAUSTIVE_LIMIT} geradores"
            )
        for bits in range(1 << (1 << self.arity)):
            yield CanonExpr(bits, self.arity)

    def sequents(self) -> Iterator[Sequent]:
        """Todos os pares (Γ, Δ) de subconjuntos de geradores"""
        for choice in itertools.product(range(4), repeat=self.arity):
            gamma = frozenset(i for i, c in enumerate(choice) if c & 1)
            delta = frozenset(i for i, c in enumerate(choice) if c & 2)
            yield Sequent(gamma, delta)


def canon(
    e: BoolExpr,
    generators: Optional[Iterable[str]] = None,
    max_generators: int = DEFAULT_MAX_GENERATORS,
) -> CanonExpr:
    """Atalho: geradores em ordem alfabética quando não informados"""
    names = sorted(e.generators()) if generators is None else list(generators)
    return FreeAlgebra(names, max_generators).canon(e)


# Filtros e ideais


class Polarity(str, Enum):
    FILTER = "filter"
    IDEAL = "ideal"


class TheoryFilter:
    """
    F_T (ou I_T) de uma teoria de cláusulas

    Um elemento pertence a F_T quando cada maxtermo da sua FNC canônica,
    lido como sequente, é derivável em ⊢_T. O ideal é o dual: e ∈ I_T ⇔ ¬e ∈ F_T.
    """

    def __init__(
        self,
        theory: ClauseTheory,
        polarity: Polarity = Polarity.FILTER,
        max_generators: int = DEFAULT_MAX_GENERATORS,
        heuristic: bool = False,
    ):
        self.theory = theory
        self.polarity = polarity
        self.algebra = FreeAlgebra(theory.atoms, max_generators)
        self.prover = Prover(theory, heuristic)
        self._row_derivable = functools.lru_cache(maxsize=None)(self._derive_row)

    def _derive_row(self, k: int) -> bool:
        return self.prover.derive(row_sequent(k, self.algebra.arity)) is not None

    def __contains__(self, e: CanonExpr) -> bool:
        if self.polarity is Polarity.IDEAL:
            e = ~e
        return all(self._row_derivable(k) for k in e.falsifying_rows())

    def contains_expr(self, e: BoolExpr) -> bool:
        return self.algebra.canon(e) in self

    def is_proper(self) -> bool:
        """⊥ ∉ F_T (dualmente ⊤ ∉ I_T)"""
        if self.polarity is Polarity.FILTER:
            return self.algebra.bottom not in self
        return self.algebra.top not in self

    def members(self) -> List[CanonExpr]:
        return [e for e in self.algebra.elements() if e in self]


class GeneratedFilter:
    """
    Filtro (ou ideal) gerado por um conjunto finito, saturado sobre a álgebra

    Args:
        algebra (FreeAlgebra): Álgebra com no máximo três geradores
        generators (Iterable[CanonExpr]): Conjunto gerador
        polarity (Polarity): filter ou ideal
    """

    def __init__(
        self,
        algebra: FreeAlgebra,
        generators: Iterable[CanonExpr] = (),
        polarity: Polarity = Polarity.FILTER,
    ):
        if algebra.arity > EXHAUSTIVE_LIMIT:
            raise SizeLimitError(
                f"Filtros explícitos limitados a {EXHAUSTIVE_LIMIT} geradores"
            )
        self.algebra = algebra
        self.polarity = polarity
        self.generators = tuple(generators)
        self._members = self._saturate()
        logger.debug(f"Filtro saturado com {len(self._members)} elementos")

    def _saturate(self) -> FrozenSet[int]:
        elements = list(self.algebra.elements())
        if self.polarity is Polarity.FILTER:
            neutral, combine = self.algebra.top, (lambda x, y: x & y)
            closed = lambda x, y: x.leq(y)  # noqa: E731
        else:
            neutral, combine = self.algebra.bottom, (lambda x, y: x | y)
            closed = lambda x, y: y.leq(x)  # noqa: E731

        members = {neutral.bits} | {g.bits for g in self.generators}
        while True:
            current = [CanonExpr(b, self.algebra.arity) for b in members]
            grown = set(members)
            for x, y in itertools.product(current, repeat=2):
                grown.add(combine(x, y).bits)
            for x in current:
                grown.update(y.bits for y in elements if closed(x, y))
            if grown == members:
                return frozenset(members)
            members = grown

    def __contains__(self, e: CanonExpr) -> bool:
        return e.bits in self._members

    def is_proper(self) -> bool:
        if self.polarity is Polarity.FILTER:
            return self.algebra.bottom not in self
        return self.algebra.top not in self

    def members(self) -> List[CanonExpr]:
        return [CanonExpr(b, self.algebra.arity) for b in sorted(self._members)]


class ModelFilter:
    """Filtro primo (ou ideal primo) determinado por uma valoração dos geradores"""

    def __init__(
        self,
        algebra: FreeAlgebra,
        alpha: Valuation,
        polarity: Polarity = Polarity.FILTER,
    ):
        if len(alpha.values) != algebra.arity:
            raise InvalidArgumentsError("Valoração não é total sobre os geradores")
        self.algebra = algebra
        self.alpha = alpha
        self.polarity = polarity
        self._target = 1 if polarity is Polarity.FILTER else 0

    def __contains__(self, e: CanonExpr) -> bool:
        return e.evaluate(self.alpha) == self._target


def prime_filter_from_model(algebra: FreeAlgebra, alpha: Valuation) -> ModelFilter:
    return ModelFilter(algebra, alpha, Polarity.FILTER)


def prime_ideal_from_model(algebra: FreeAlgebra, alpha: Valuation) -> ModelFilter:
    return ModelFilter(algebra, alpha, Polarity.IDEAL)


Membership = Callable[[CanonExpr], bool]


def _membership(F) -> Membership:
    return F.__contains__


def verify_filter(
    algebra: FreeAlgebra, F, polarity: Polarity = Polarity.FILTER
) -> bool:
    """
    Verificação exaustiva dos axiomas de filtro (ou de ideal)

    Args:
        algebra (FreeAlgebra): Álgebra com no máximo três geradores
        F: Objeto com teste de pertinência `in`
        polarity (Polarity): filter ou ideal

    Returns:
        bool: True se contém o neutro e é fechado pela operação e pela ordem
    """
    member = _membership(F)
    elements = list(algebra.elements())
    members = [e for e in elements if member(e)]
    if polarity is Polarity.FILTER:
        if not member(algebra.top):
            return False
        combine = lambda x, y: x & y  # noqa: E731
        above = lambda x, y: x.leq(y)  # noqa: E731
    else:
        if not member(algebra.bottom):
            return False
        combine = lambda x, y: x | y  # noqa: E731
        above = lambda x, y: y.leq(x)  # noqa: E731
    inside = {e.bits for e in members}
    for x, y in itertools.product(members, repeat=2):
        if combine(x, y).bits not in inside:
            return False
    return all(y.bits in inside for x in members for y in elements if above(x, y))


def verify_prime(algebra: FreeAlgebra, U, polarity: Polarity = Polarity.FILTER) -> bool:
    """Filtro próprio e primo: b1 ∨̇ b2 ∈ U ⇔ b1 ∈ U ∨ b2 ∈ U, e ¬̇b ∈ U ⇔ b ∉ U"""
    if not verify_filter(algebra, U, polarity):
        return False
    member = _membership(U)
    elements = list(algebra.elements())
    if polarity is Polarity.FILTER:
        if member(algebra.bottom):
            return False
        split = lambda x, y: x | y  # noqa: E731
    else:
        if member(algebra.top):
            return False
        split = lambda x, y: x & y  # noqa: E731
    for x in elements:
        if member(~x) == member(x):
            return False
    return all(
        member(split(x, y)) == (member(x) or member(y))
        for x, y in itertools.product(elements, repeat=2)
    )


def extends(algebra: FreeAlgebra, F, U) -> bool:
    """Todo membro de F pertence a U"""
    member_f, member_u = _membership(F), _membership(U)
    return all(member_u(e) for e in algebra.elements() if member_f(e))


def _check_exhaustive(T: ClauseTheory) -> None:
    if T.size > EXHAUSTIVE_LIMIT:
        raise SizeLimitError(
            f"Verificação exaustiva limitada a {EXHAUSTIVE_LIMIT} átomos, "
            f"teoria tem {T.size}"
        )


def _prime_extension(T: ClauseTheory, F: TheoryFilter) -> Optional[Valuation]:
    members = F.members()
    target = 1 if F.polarity is Polarity.FILTER else 0
    for alpha in all_valuations(T.size):
        if all(e.evaluate(alpha) == target for e in members):
            return alpha
    return None


def _check_prime_theorem(name: str, T: ClauseTheory, polarity: Polarity) -> FoundReport:
    _check_exhaustive(T)
    F = TheoryFilter(T, polarity)
    proper = F.is_proper()
    model = F.prover.countermodel(Sequent())
    extension = _prime_extension(T, F)
    approximable_c = approximable(theory_as_approx(T).complement())

    checks = {
        "proper_iff_approximable": proper == approximable_c,
        "proper_iff_model": proper == (model is not None),
        "extension_iff_model": (extension is not None) == (model is not None),
        "model_extends": model is None
        or extends(F.algebra, F, ModelFilter(F.algebra, model, polarity)),
        "is_filter": verify_filter(F.algebra, F, polarity),
    }
    if extension is not None:
        checks["extension_is_prime"] = verify_prime(
            F.algebra, ModelFilter(F.algebra, extension, polarity), polarity
        )
    holds = ((not proper) or extension is not None) and all(checks.values())
    if not holds:
        logger.error(
            f"{name} falhou para teoria com {len(T.clauses)} cláusulas: {checks}"
        )
    return FoundReport(
        name,
        holds,
        extension,
        detail={"hypothesis": proper, "conclusion": extension is not None, **checks},
    )


def check_BPF(T: ClauseTheory) -> FoundReport:
    """F_T próprio ⇒ existe filtro primo estendendo F_T, com as coincidências do motor"""
    return _check_prime_theorem("BPF", T, Polarity.FILTER)


def check_BPI(T: ClauseTheory) -> FoundReport:
    return _check_prime_theorem("BPI", T, Polarity.IDEAL)


def _check_contrapositive(
    name: str, T: ClauseTheory, polarity: Polarity
) -> FoundReport:
    _check_exhaustive(T)
    F = TheoryFilter(T, polarity)
    extension = _prime_extension(T, F)
    derivation = F.prover.derive(Sequent())
    improper = not F.is_proper()
    holds = extension is not None or (improper and derivation is not None)
    return FoundReport(
        name,
        holds,
        derivation,
        detail={"hypothesis": extension is None, "conclusion": improper},
    )


def check_coBPF(T: ClauseTheory) -> FoundReport:
    """Nenhum filtro primo estende F_T ⇒ ⊥ ∈ F_T, com derivação de ∅ ▷ ∅"""
    return _check_contrapositive("coBPF", T, Polarity.FILTER)


def check_coBPI(T: ClauseTheory) -> FoundReport:
    return _check_contrapositive("coBPI", T, Polarity.IDEAL)


def theory_from_filter(F) -> ClauseTheory:
    """
    𝒯_F: (Γ ▷ Δ) ∈ 𝒯_F quando (⋁¬Γ) ∨ (⋁Δ) ∈ F

    Args:
        F: Filtro com atributo `algebra` (no máximo três geradores)

    Returns:
        ClauseTheory: Teoria sobre os geradores da álgebra
    """
    algebra: FreeAlgebra = F.algebra
    if algebra.arity > EXHAUSTIVE_LIMIT:
        raise SizeLimitError(f"𝒯_F limitado a {EXHAUSTIVE_LIMIT} geradores")
    clauses = [s for s in algebra.sequents() if algebra.clause(s) in F]
    return ClauseTheory.of(algebra.generators, clauses)


def check_filter_theory(F) -> FoundReport:
    """Γ ⊢_{𝒯_F} Δ ⇔ (⋁¬Γ) ∨ (⋁Δ) ∈ F, sobre todos os sequentes"""
    T = theory_from_filter(F)
    prover = Prover(T)
    mismatch: Optional[Sequent] = None
    for s in F.algebra.sequents():
        if (prover.derive(s) is not None) != (F.algebra.clause(s) in F):
            mismatch = s
            break
    return FoundReport(
        "T_F", mismatch is None, mismatch, detail={"clauses": len(T.clauses)}
    )


def check_roundtrip(T: ClauseTheory) -> FoundReport:
    """Derivabilidade em 𝒯_{F_𝒯} coincide com derivabilidade em 𝒯"""
    _check_exhaustive(T)
    F = TheoryFilter(T)
    back = Prover(theory_from_filter(F))
    original = Prover(T)
    mismatch: Optional[Sequent] = None
    for s in F.algebra.sequents():
        if (back.derive(s) is None) != (original.derive(s) is None):
            mismatch = s
            break
    return FoundReport("T_F_T", mismatch is None, mismatch)


def filter_summary(F) -> Dict[str, object]:
    return {
        "polarity": F.polarity.value,
        "proper": F.is_proper(),
        "members": [e.to_text() for e in F.members()],
    }
