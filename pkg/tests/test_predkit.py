import pytest
from hypothesis import given
from hypothesis import strategies as st

from wellfound.errors import DepthExceededError, InvalidArgumentsError
from wellfound.predkit import (
    Pred,
    Universe,
    chain_predicate,
    down_arborify,
    down_monotonise,
    is_monotone,
    is_tree,
    up_arborify,
    up_monotonise,
)
from wellfound.seqcore import SeqU

U23 = Universe.of(2, 3)
FULL = U23.tables.full_mask

OPERATIONS = (down_arborify, up_monotonise, up_arborify, down_monotonise)


def test_rank_is_breadth_first(binary_universe):
    texts = [u.to_text() for u in binary_universe.sequences()]
    assert texts == ["ε", "0", "1", "00", "01", "10", "11"]
    assert binary_universe.rank(SeqU.from_text(binary_universe.alphabet, "10")) == 5


def test_rank_rejects_deep_sequence(binary_universe):
    with pytest.raises(DepthExceededError):
        binary_universe.rank(SeqU.from_text(binary_universe.alphabet, "101"))


def test_pred_rejects_mask_outside_universe(binary_universe):
    with pytest.raises(InvalidArgumentsError):
        Pred(binary_universe, 1 << binary_universe.node_count)


def test_membership_beyond_depth_is_false(binary_universe):
    T = Pred.full(binary_universe)
    assert SeqU.from_text(binary_universe.alphabet, "111") not in T


def test_down_arborify_keeps_closed_prefixes(binary_universe):
    T = Pred.from_texts(binary_universe, ["", "1", "01", "11"])
    assert down_arborify(T).to_texts() == ["ε", "1", "11"]


def test_up_monotonise_adds_extensions(binary_universe):
    T = Pred.from_texts(binary_universe, ["0"])
    assert up_monotonise(T).to_texts() == ["0", "00", "01"]


def test_up_arborify_and_down_monotonise(binary_universe):
    T = Pred.from_texts(binary_universe, ["01"])
    assert up_arborify(T).to_texts() == ["ε", "0", "01"]
    leaves = Pred.from_texts(binary_universe, ["0", "00", "01", "10"])
    assert down_monotonise(leaves).to_texts() == ["0", "00", "01", "10"]


def test_chain_predicate_is_tree(binary_universe):
    chain = chain_predicate(binary_universe, (1, 0))
    assert chain.to_texts() == ["ε", "1", "10"]
    assert is_tree(chain)


@given(st.integers(min_value=0, max_value=FULL))
def test_tree_monotone_duality(mask):
    T = Pred(U23, mask)
    assert is_tree(T) == is_monotone(T.complement())


@given(st.integers(min_value=0, max_value=FULL))
def test_closures_sandwich(mask):
    T = Pred(U23, mask)
    assert down_arborify(T).issubset(T)
    assert T.issubset(up_monotonise(T))
    assert is_tree(down_arborify(T))
    assert is_monotone(up_monotonise(T))


@given(st.integers(min_value=0, max_value=FULL))
def test_closures_idempotent(mask):
    T = Pred(U23, mask)
    for op in OPERATIONS:
        assert op(op(T)) == op(T)
