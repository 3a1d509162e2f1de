import pytest
from hypothesis import given
from hypothesis import strategies as st

from wellfound.errors import (
    DepthMismatchError,
    InvalidArgumentsError,
    UnknownPrincipleError,
)
from wellfound.foundkit import (
    PRINCIPLES,
    Boundary,
    Leaf,
    Node,
    all_itrees,
    check_principle,
    classify,
    find_branch,
    has_infinite_branch,
    has_unbounded_paths,
    hereditary_at,
    hereditary_closure,
    is_barred,
    is_inductively_barred,
    is_productive,
    is_spread,
    is_uniformly_barred,
    is_well_founded_at,
    itree_height,
    itree_to_extensional,
    progressing_at,
    pruning,
    realises,
    verify_witness,
)
from wellfound.predkit import Pred, Universe
from wellfound.seqcore import Alphabet, SeqU

U23 = Universe.of(2, 3)
masks = st.integers(min_value=0, max_value=U23.tables.full_mask)


def full_tree(height):
    if height == 0:
        return Leaf()
    return Node((full_tree(height - 1), full_tree(height - 1)))


def test_spread_is_productive(spread_pred):
    assert is_spread(spread_pred)
    assert is_productive(spread_pred)
    assert find_branch(spread_pred).to_text() == "11"


def test_dead_end_is_not_productive(binary_universe):
    T = Pred.from_texts(binary_universe, ["", "0"])
    assert not is_spread(T)
    assert not is_productive(T)
    assert pruning(T) == Pred.empty(binary_universe)


def test_local_progression_and_heredity(binary_universe):
    B = binary_universe.alphabet
    T = Pred.from_texts(binary_universe, ["", "0", "00"])
    assert progressing_at(T, SeqU.from_text(B, ""))
    assert progressing_at(T, SeqU.from_text(B, "1"))
    assert hereditary_at(T, SeqU.from_text(B, "1"))

    children_only = Pred.from_texts(binary_universe, ["10", "11"])
    assert not hereditary_at(children_only, SeqU.from_text(B, "1"))

    # folhas dependem da convenção de fronteira
    leaf_in, leaf_out = SeqU.from_text(B, "00"), SeqU.from_text(B, "01")
    assert progressing_at(T, leaf_in, Boundary.OPEN)
    assert not progressing_at(T, leaf_in, Boundary.CLOSED)
    assert hereditary_at(T, leaf_out, Boundary.OPEN)
    assert not hereditary_at(T, leaf_out, Boundary.CLOSED)


def test_leaves_are_inductively_barred(binary_universe):
    leaves = Pred.from_texts(binary_universe, ["00", "01", "10", "11"])
    assert is_inductively_barred(leaves)
    assert hereditary_closure(leaves) == Pred.full(binary_universe)


def test_boundary_changes_fixed_points(binary_universe):
    empty = Pred.empty(binary_universe)
    full = Pred.full(binary_universe)
    assert not is_inductively_barred(empty, Boundary.OPEN)
    assert is_inductively_barred(empty, Boundary.CLOSED)
    assert is_productive(full, Boundary.OPEN)
    assert not is_productive(full, Boundary.CLOSED)


def test_classify_spread(spread_pred):
    reports = classify(spread_pred)
    assert reports["productive"].holds
    assert reports["productive"].witness.to_text() == "11"
    assert reports["barred"].holds
    assert reports["staged_barred"].witness == 0
    assert reports["unbounded_paths"].witness.to_text() == "11"
    assert all(verify_witness(spread_pred, r) for r in reports.values())


def test_classify_reports_missing_level(binary_universe):
    T = Pred.from_texts(binary_universe, ["", "1"])
    reports = classify(T)
    assert not reports["unbounded_paths"].holds
    assert reports["unbounded_paths"].witness == 2
    assert not reports["staged_infinite"].holds
    assert reports["staged_infinite"].witness == 2


def test_unknown_principle():
    with pytest.raises(UnknownPrincipleError):
        check_principle("DC^magic", Pred.empty(U23))


def test_uniform_fan_theorem_instance(binary_universe):
    T = Pred.from_texts(binary_universe, ["0", "1"])
    report = check_principle("FT^uniform", T)
    assert report.holds
    assert report.detail["hypothesis"] and report.detail["conclusion"]
    assert report.detail["logic"] == "intuicionista"
    assert check_principle("DC^spread", T).detail["logic"] == "co-intuicionista"


def test_itree_extension_and_realiser(binary_universe):
    t = Node((Leaf(), Leaf()))
    T = itree_to_extensional(t, binary_universe)
    assert T.to_texts() == ["ε"]
    assert realises(t, T)
    assert not realises(Leaf(), T)
    assert is_well_founded_at(t, binary_universe)


def test_tallest_itree_stays_well_founded(binary_universe):
    t = full_tree(2)
    assert itree_height(t) == 2
    T = itree_to_extensional(t, binary_universe)
    assert T == Pred.from_texts(binary_universe, ["", "0", "1"])
    assert realises(t, T)
    assert is_well_founded_at(t, binary_universe)


def test_itree_reaching_depth_rejected(binary_universe):
    # altura 3 poria nós no nível 2, com folhas fora do universo
    with pytest.raises(DepthMismatchError):
        itree_to_extensional(full_tree(3), binary_universe)
    with pytest.raises(DepthMismatchError):
        itree_to_extensional(full_tree(4), binary_universe)


def test_itree_wrong_arity(binary_universe):
    with pytest.raises(InvalidArgumentsError):
        itree_to_extensional(Node((Leaf(),)), binary_universe)


def test_all_itrees_counts():
    assert len(all_itrees(Alphabet(2), 1)) == 2
    assert len(all_itrees(Alphabet(2), 2)) == 5


@given(masks)
def test_productive_iff_unbounded(mask):
    T = Pred(U23, mask)
    assert is_productive(T) == has_unbounded_paths(T)
    assert is_inductively_barred(T) == is_uniformly_barred(T)


@given(masks)
def test_converse_directions(mask):
    T = Pred(U23, mask)
    assert not is_inductively_barred(T) or is_barred(T)
    assert not has_infinite_branch(T) or is_productive(T)


@given(masks, st.sampled_from(list(Boundary)))
def test_principles_hold_with_verified_witnesses(mask, boundary):
    T = Pred(U23, mask)
    for name in PRINCIPLES:
        report = check_principle(name, T, boundary)
        assert report.holds, name
        assert verify_witness(T, report), name


@given(masks, st.sampled_from(list(Boundary)))
def test_classify_witnesses_recheck(mask, boundary):
    T = Pred(U23, mask)
    for report in classify(T, boundary).values():
        assert verify_witness(T, report), report.property
