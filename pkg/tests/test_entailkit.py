from unittest.mock import patch

import pytest
from hypothesis import given
from hypothesis import strategies as st

from wellfound.entailkit import (
    Ax,
    AxT,
    ClauseTheory,
    Cut,
    Prover,
    Sequent,
    all_valuations,
    check_completeness,
    check_derivation,
    derivable,
    derivation_size,
    enumerate_models,
    find_model,
    find_model_bruteforce,
    positively_disprovable,
    satisfies,
    sequent_holds_in,
    translate,
)
from wellfound.errors import InvalidArgumentsError, SizeLimitError

ATOMS = ["p0", "p1", "p2"]
indices = st.frozensets(st.integers(min_value=0, max_value=2), max_size=3)
clauses = st.lists(st.tuples(indices, indices), max_size=4)
MODES = [(False, False), (True, False), (False, True)]


def build(raw):
    return ClauseTheory.of(ATOMS, [Sequent(g, d) for g, d in raw])


def test_inconsistent_theory(inconsistent_theory):
    d = derivable(inconsistent_theory, Sequent())
    assert isinstance(d, Cut)
    assert check_derivation(inconsistent_theory, d)
    assert derivation_size(d) == 3
    assert find_model(inconsistent_theory) is None


def test_consistent_theory_model(consistent_theory):
    assert derivable(consistent_theory, Sequent()) is None
    model = find_model(consistent_theory)
    assert model.as_dict(consistent_theory.atoms) == {"a": 1, "b": 1}
    assert satisfies(model, consistent_theory)


def test_axiom_rules(consistent_theory):
    assert isinstance(derivable(consistent_theory, Sequent.of([0], [0])), Ax)
    assert isinstance(derivable(consistent_theory, Sequent.of([], [0, 1])), AxT)


def test_countermodel(consistent_theory):
    alpha = positively_disprovable(consistent_theory, Sequent.of([0], [1]))
    assert alpha.values == (1, 0)
    assert positively_disprovable(consistent_theory, Sequent.of([], [0, 1])) is None


def test_check_derivation_rejects_bad_leaf(consistent_theory):
    assert not check_derivation(consistent_theory, Ax(Sequent.of([0], [1]), 0))
    foreign = Sequent.of([1], [])
    assert not check_derivation(consistent_theory, AxT(Sequent.of([1], []), foreign))


def test_theory_validation():
    with pytest.raises(InvalidArgumentsError):
        ClauseTheory.of(["a", "a"])
    with pytest.raises(InvalidArgumentsError):
        ClauseTheory.from_names(["a"], [(["b"], [])])
    with pytest.raises(InvalidArgumentsError):
        Prover(ClauseTheory.of(["a"])).derive(Sequent.of([3], []))


def test_bruteforce_limit():
    with pytest.raises(SizeLimitError):
        enumerate_models(ClauseTheory.of([f"p{i}" for i in range(21)]))


def test_translate():
    assert translate(Sequent.of([0], [1])).pairs == ((0, 1), (1, 0))


def test_completeness_on_examples(inconsistent_theory, consistent_theory):
    assert check_completeness(inconsistent_theory).holds
    report = check_completeness(consistent_theory)
    assert report.holds
    assert report.detail["consistent"]


def test_provability_side_uses_positive_unsatisfiability(
    inconsistent_theory, consistent_theory
):
    report = check_completeness(inconsistent_theory)
    assert report.detail["positively_unsatisfiable"]
    assert report.detail["compl_plus"]

    report = check_completeness(consistent_theory)
    assert not report.detail["positively_unsatisfiable"]
    assert report.detail["compl_plus"]

    # Insatisfatibilidade positiva sobre teoria consistente contradiz Compl⁺
    with patch("wellfound.entailkit.positively_unsatisfiable", return_value=True):
        broken = check_completeness(consistent_theory)
    assert broken.detail["compl_minus"]
    assert not broken.detail["compl_plus"]
    assert not broken.holds


@pytest.mark.parametrize("heuristic,unit_propagation", MODES)
@given(raw=clauses, gamma=indices, delta=indices)
def test_derivable_iff_valid(heuristic, unit_propagation, raw, gamma, delta):
    T = build(raw)
    s = Sequent(gamma, delta)
    d = Prover(T, heuristic, unit_propagation).derive(s)
    models = [alpha for alpha in all_valuations(3) if satisfies(alpha, T)]
    assert (d is not None) == all(sequent_holds_in(alpha, s) for alpha in models)
    if d is not None:
        assert check_derivation(T, d)


@given(raw=clauses, gamma=indices, delta=indices, extra=indices)
def test_weakening_preserves_derivability(raw, gamma, delta, extra):
    T = build(raw)
    prover = Prover(T)
    s = Sequent(gamma, delta)
    if prover.derive(s) is not None:
        assert prover.derive(s.weaken(gamma=extra)) is not None
        assert prover.derive(s.weaken(delta=extra)) is not None


@given(raw=clauses)
def test_model_search_matches_enumeration(raw):
    T = build(raw)
    assert (find_model(T) is None) == (find_model_bruteforce(T) is None)
    assert check_completeness(T).holds
