"""
Módulo de predicados sobre o universo limitado U(B, d)

Um predicado é uma tabela de pertinência total guardada como máscara de bits,
indexada pelo rank em largura das sequências do universo.
"""

import functools
import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, List, NamedTuple, Tuple

from wellfound.errors import DepthExceededError, InvalidArgumentsError
from wellfound.seqcore import Alphabet, SeqU


class _Tables(NamedTuple):
    nodes: Tuple[Tuple[int, ...], ...]
    lengths: Tuple[int, ...]
    offsets: Tuple[int, ...]
    parent: Tuple[int, ...]
    children: Tuple[Tuple[int, ...], ...]
    prefix_mask: Tuple[int, ...]
    ext_mask: Tuple[int, ...]
    level_mask: Tuple[int, ...]
    full_mask: int


@functools.lru_cache(maxsize=64)
def _build_tables(size: int, depth: int) -> _Tables:
    nodes = []
    offsets = []
    for n in range(depth + 1):
        offsets.append(len(nodes))
        nodes.extend(itertools.product(range(size), repeat=n))
    index = {items: i for i, items in enumerate(nodes)}

    parent = tuple(index[items[:-1]] if items else -1 for items in nodes)
    children = tuple(
        tuple(index[items + (a,)] for a in range(size)) if len(items) < depth else ()
        for items in nodes
    )

    prefix_mask = []
    for i, items in enumerate(nodes):
        mask = 1 << i
        j = parent[i]
        while j >= 0:
            mask |= 1 << j
            j = parent[j]
        prefix_mask.append(mask)

    # Extensões calculadas das folhas para a raiz
    ext_mask = [0] * len(nodes)
    for i in reversed(range(len(nodes))):
        mask = 1 << i
        for c in children[i]:
            mask |= ext_mask[c]
        ext_mask[i] = mask

    level_mask = []
    for n in range(depth + 1):
        mask = 0
        for i, items in enumerate(nodes):
            if len(items) == n:
                mask |= 1 << i
        level_mask.append(mask)

    return _Tables(
        nodes=tuple(nodes),
        lengths=tuple(len(items) for items in nodes),
        offsets=tuple(offsets),
        parent=parent,
        children=children,
        prefix_mask=tuple(prefix_mask),
        ext_mask=tuple(ext_mask),
        level_mask=tuple(level_mask),
        full_mask=(1 << len(nodes)) - 1,
    )


@dataclass(frozen=True)
class Universe:
    """Universo U(B, d) de todas as sequências de comprimento <= d"""

    alphabet: Alphabet
    depth: int

    def __post_init__(self):
        if self.depth < 0:
            raise InvalidArgumentsError(f"Profundidade negativa: {self.depth}")

    @classmethod
    def of(cls, size: int, depth: int) -> "Universe":
        return cls(Alphabet(size), depth)

    @property
    def tables(self) -> _Tables:
        return _build_tables(self.alphabet.size, self.depth)

    @property
    def node_count(self) -> int:
        return len(self.tables.nodes)

    def rank(self, u: SeqU) -> int:
        """
        Rank em largura de uma sequência

        Args:
            u (SeqU): Sequência do universo

        Returns:
            int: Índice na tabela de pertinência
        """
        if len(u) > self.depth:
            raise DepthExceededError(
                f"Sequência {u} excede a profundidade {self.depth} do universo"
            )
        value = 0
        for a in u:
            value = value * self.alphabet.size + self.alphabet.check(a)
        return self.tables.offsets[len(u)] + value

    def node(self, i: int) -> SeqU:
        return SeqU(self.alphabet, self.tables.nodes[i])

    def sequences(self) -> Iterator[SeqU]:
        for i in range(self.node_count):
            yield self.node(i)

    def describe(self) -> str:
        return f"U(B={self.alphabet.size}, d={self.depth})"


@dataclass(frozen=True)
class Pred:
    """Predicado total sobre um universo, como máscara de bits"""

    universe: Universe
    mask: int = 0

    def __post_init__(self):
        if self.mask < 0 or self.mask > self.universe.tables.full_mask:
            raise InvalidArgumentsError("Máscara fora do universo")

    @classmethod
    def empty(cls, universe: Universe) -> "Pred":
        return cls(universe, 0)

    @classmethod
    def full(cls, universe: Universe) -> "Pred":
        return cls(universe, universe.tables.full_mask)

    @classmethod
    def from_sequences(cls, universe: Universe, seqs: Iterable[SeqU]) -> "Pred":
        mask = 0
        for u in seqs:
            mask |= 1 << universe.rank(u)
        return cls(universe, mask)

    @classmethod
    def from_texts(cls, universe: Universe, texts: Iterable[str]) -> "Pred":
        """Atalho: cada string de dígitos é um membro ("" para ⟨⟩)"""
        return cls.from_sequences(
            universe, (SeqU.from_text(universe.alphabet, t) for t in texts)
        )

    def has_rank(self, i: int) -> bool:
        return bool(self.mask >> i & 1)

    def __contains__(self, u: SeqU) -> bool:
        if len(u) > self.universe.depth:
            return False
        return self.has_rank(self.universe.rank(u))

    def members(self) -> List[SeqU]:
        return [
            self.universe.node(i)
            for i in range(self.universe.node_count)
            if self.has_rank(i)
        ]

    def to_texts(self) -> List[str]:
        return [u.to_text() for u in self.members()]

    def __len__(self) -> int:
        return bin(self.mask).count("1")

    def complement(self) -> "Pred":
        return Pred(self.universe, self.universe.tables.full_mask & ~self.mask)

    def __and__(self, other: "Pred") -> "Pred":
        return Pred(self.universe, self.mask & other.mask)

    def __or__(self, other: "Pred") -> "Pred":
        return Pred(self.universe, self.mask | other.mask)

    def issubset(self, other: "Pred") -> bool:
        return self.mask & ~other.mask == 0

    def __str__(self) -> str:
        return "{" + ", ".join(str(u) for u in self.members()) + "}"


def all_predicates(universe: Universe) -> Iterator[Pred]:
    """Todos os 2^|U| predicados do universo"""
    for mask in range(universe.tables.full_mask + 1):
        yield Pred(universe, mask)


def _select(T: Pred, keep) -> Pred:
    tables = T.universe.tables
    mask = 0
    for i in range(len(tables.nodes)):
        if keep(i, tables):
            mask |= 1 << i
    return Pred(T.universe, mask)


def down_arborify(T: Pred) -> Pred:
    """⌄T: todos os prefixos de u estão em T"""
    m = T.mask
    return _select(T, lambda i, t: t.prefix_mask[i] & m == t.prefix_mask[i])


def up_monotonise(T: Pred) -> Pred:
    """↑T: algum prefixo de u está em T"""
    m = T.mask
    return _select(T, lambda i, t: t.prefix_mask[i] & m != 0)


def up_arborify(T: Pred) -> Pred:
    """Alguma extensão de u (até a profundidade d) está em T"""
    m = T.mask
    return _select(T, lambda i, t: t.ext_mask[i] & m != 0)


def down_monotonise(T: Pred) -> Pred:
    """Todas as extensões de u (até a profundidade d) estão em T"""
    m = T.mask
    return _select(T, lambda i, t: t.ext_mask[i] & m == t.ext_mask[i])


def is_tree(T: Pred) -> bool:
    """Fechado por restrição: u ⋆ a ∈ T implica u ∈ T"""
    return down_arborify(T).mask == T.mask


def is_monotone(T: Pred) -> bool:
    """Fechado por extensão dentro da profundidade d"""
    return up_monotonise(T).mask == T.mask


def chain_predicate(universe: Universe, values: Tuple[int, ...]) -> Pred:
    """Conjunto dos prefixos de um ramo de profundidade d (spread minimal)"""
    alphabet = universe.alphabet
    return Pred.from_sequences(
        universe, (SeqU(alphabet, values[:n]) for n in range(len(values) + 1))
    )
