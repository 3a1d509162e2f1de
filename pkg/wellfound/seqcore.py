"""
Módulo de sequências finitas, ordem de prefixo e ramos truncados
"""

import itertools
from dataclasses import dataclass
from typing import Iterator, Tuple

from wellfound.errors import (
    DepthExceededError,
    InvalidArgumentsError,
    InvalidElementError,
)


@dataclass(frozen=True)
class Alphabet:
    """Alfabeto finito {0, ..., size-1}"""

    size: int

    def __post_init__(self):
        if self.size < 1:
            raise InvalidArgumentsError(
                f"Alfabeto deve ter tamanho >= 1, recebido {self.size}"
            )

    def elements(self) -> range:
        return range(self.size)

    def check(self, a: int) -> int:
        """
        Valida um elemento do alfabeto

        Args:
            a (int): Elemento candidato

        Returns:
            int: O próprio elemento
        """
        if not isinstance(a, int) or a < 0 or a >= self.size:
            raise InvalidElementError(
                f"Elemento {a!r} fora do alfabeto de tamanho {self.size}"
            )
        return a


@dataclass(frozen=True)
class SeqU:
    """Sequência finita sobre um alfabeto"""

    alphabet: Alphabet
    items: Tuple[int, ...] = ()

    def __post_init__(self):
        for a in self.items:
            self.alphabet.check(a)

    @classmethod
    def empty(cls, alphabet: Alphabet) -> "SeqU":
        return cls(alphabet, ())

    @classmethod
    def of(cls, alphabet: Alphabet, *items: int) -> "SeqU":
        return cls(alphabet, tuple(items))

    @classmethod
    def from_text(cls, alphabet: Alphabet, text: str) -> "SeqU":
        """Constrói a sequência a partir de uma string de dígitos ("" para ⟨⟩)"""
        return cls(alphabet, tuple(int(ch) for ch in text))

    @property
    def length(self) -> int:
        return len(self.items)

    def __len__(self) -> int:
        return len(self.items)

    def __getitem__(self, n: int) -> int:
        return self.items[n]

    def __iter__(self) -> Iterator[int]:
        return iter(self.items)

    def extend(self, a: int) -> "SeqU":
        return extend(self, a)

    def concat(self, other: "SeqU") -> "SeqU":
        """v @ u"""
        return SeqU(self.alphabet, self.items + other.items)

    def cons(self, a: int) -> "SeqU":
        """a @ u"""
        return SeqU(self.alphabet, (self.alphabet.check(a),) + self.items)

    def prefix(self, n: int) -> "SeqU":
        return SeqU(self.alphabet, self.items[:n])

    def to_text(self) -> str:
        return "".join(str(a) for a in self.items) or "ε"

    def __str__(self) -> str:
        return "⟨" + ",".join(str(a) for a in self.items) + "⟩"


@dataclass(frozen=True)
class Branch:
    """Ramo truncado: mapa total de {0..d-1} para o alfabeto"""

    alphabet: Alphabet
    values: Tuple[int, ...]

    def __post_init__(self):
        for a in self.values:
            self.alphabet.check(a)

    @property
    def depth(self) -> int:
        return len(self.values)

    def __call__(self, n: int) -> int:
        return self.values[n]

    def prefix(self, n: int) -> SeqU:
        """α restrito aos n primeiros índices"""
        if n > self.depth:
            raise DepthExceededError(
                f"Prefixo {n} maior que a profundidade {self.depth}"
            )
        return SeqU(self.alphabet, self.values[:n])

    def prefixes(self) -> Iterator[SeqU]:
        for n in range(self.depth + 1):
            yield self.prefix(n)

    def tail(self) -> "Branch":
        return Branch(self.alphabet, self.values[1:])

    def to_text(self) -> str:
        return "".join(str(a) for a in self.values) or "ε"

    def __str__(self) -> str:
        return "[" + ",".join(str(a) for a in self.values) + "]"


def extend(u: SeqU, a: int) -> SeqU:
    """
    Estende a sequência com um elemento (u ⋆ a)

    Args:
        u (SeqU): Sequência original
        a (int): Elemento do alfabeto

    Returns:
        SeqU: Sequência com a no final
    """
    return SeqU(u.alphabet, u.items + (u.alphabet.check(a),))


def is_prefix(u: SeqU, v: SeqU) -> bool:
    """u é segmento inicial de v"""
    return len(u) <= len(v) and v.items[: len(u)] == u.items


def prefix_of_branch(u: SeqU, alpha: Branch) -> bool:
    """
    Verifica u ≺ α comparando ponto a ponto

    Args:
        u (SeqU): Sequência finita
        alpha (Branch): Ramo truncado

    Returns:
        bool: True se α(n) = u(n) para todo n < |u|
    """
    if len(u) > alpha.depth:
        raise DepthExceededError(
            f"Sequência de comprimento {len(u)} excede a profundidade "
            f"{alpha.depth} do ramo"
        )
    return alpha.values[: len(u)] == u.items


def cons_branch(a: int, alpha: Branch) -> Branch:
    """a @ α: β(0) = a e β(n+1) = α(n)"""
    return Branch(alpha.alphabet, (alpha.alphabet.check(a),) + alpha.values)


def all_branches(alphabet: Alphabet, depth: int) -> Iterator[Branch]:
    """Enumera B^d em ordem lexicográfica"""
    for values in itertools.product(alphabet.elements(), repeat=depth):
        yield Branch(alphabet, values)


def all_sequences(alphabet: Alphabet, depth: int) -> Iterator[SeqU]:
    """Enumera todas as sequências de comprimento <= depth, em largura"""
    for n in range(depth + 1):
        for items in itertools.product(alphabet.elements(), repeat=n):
            yield SeqU(alphabet, items)
