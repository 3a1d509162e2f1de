import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from wellfound.boolalg import (
    And,
    Bottom,
    FreeAlgebra,
    GeneratedFilter,
    Not,
    Or,
    Polarity,
    TheoryFilter,
    Top,
    Var,
    canon,
    check_BPF,
    check_BPI,
    check_coBPF,
    check_coBPI,
    check_filter_theory,
    check_roundtrip,
    filter_summary,
    parse_expr,
    prime_filter_from_model,
    prime_ideal_from_model,
    row_sequent,
    theory_from_filter,
    verify_filter,
    verify_prime,
)
from wellfound.entailkit import ClauseTheory, Sequent, Valuation
from wellfound.errors import (
    ExpressionParseError,
    GeneratorLimitError,
    InvalidArgumentsError,
    SizeLimitError,
)
from wellfound.suites import random_expr

NAMES = ["x", "y", "z"]


def test_parse_precedence():
    e = parse_expr("a | b & !c")
    assert e == Or(Var("a"), And(Var("b"), Not(Var("c"))))
    assert str(parse_expr("!(a | b)")) == "!(a | b)"


def test_parse_constants():
    assert parse_expr("T") == Top()
    assert parse_expr("F | a") == Or(Bottom(), Var("a"))


@pytest.mark.parametrize(
    "text,position", [("", 0), ("a &", 3), ("(a | b", 6), ("a $ b", 2), ("a b", 2)]
)
def test_parse_errors(text, position):
    with pytest.raises(ExpressionParseError) as excinfo:
        parse_expr(text)
    assert excinfo.value.position == position


def test_canon_truth_table():
    assert canon(parse_expr("a & b")).to_text() == "0001"
    assert canon(parse_expr("a | !a")).is_top()
    assert canon(parse_expr("a"), ["a", "b"]).to_text() == "0101"


def test_generator_limit():
    with pytest.raises(GeneratorLimitError):
        FreeAlgebra([f"g{i}" for i in range(5)], max_generators=4)
    with pytest.raises(InvalidArgumentsError):
        FreeAlgebra(["a", "a"])


def test_exhaustive_layer_limit():
    with pytest.raises(SizeLimitError):
        list(FreeAlgebra(["a", "b", "c", "d"]).elements())


def test_row_sequent():
    assert row_sequent(0b01, 2) == Sequent.of([0], [1])


def test_theory_filter(consistent_theory):
    F = TheoryFilter(consistent_theory)
    assert F.is_proper()
    assert F.contains_expr(parse_expr("a | b"))
    assert not F.contains_expr(parse_expr("a"))
    assert verify_filter(F.algebra, F)
    summary = filter_summary(F)
    assert summary["polarity"] == "filter" and summary["proper"]


def test_theory_ideal(consistent_theory):
    ideal = TheoryFilter(consistent_theory, Polarity.IDEAL)
    assert ideal.contains_expr(parse_expr("!a & !b"))
    assert verify_filter(ideal.algebra, ideal, Polarity.IDEAL)


def test_inconsistent_filter_is_improper(inconsistent_theory):
    assert not TheoryFilter(inconsistent_theory).is_proper()
    report = check_coBPF(inconsistent_theory)
    assert report.holds and report.witness is not None


def test_prime_theorems(consistent_theory, inconsistent_theory):
    for T in (consistent_theory, inconsistent_theory):
        for check in (check_BPF, check_BPI, check_coBPF, check_coBPI):
            assert check(T).holds, check.__name__
    assert check_BPF(consistent_theory).witness.values == (0, 1)


def test_prime_theorem_size_limit():
    with pytest.raises(SizeLimitError):
        check_BPF(ClauseTheory.of(["a", "b", "c", "d"]))


def test_model_filters_are_prime():
    algebra = FreeAlgebra(NAMES)
    alpha = Valuation((1, 0, 1))
    assert verify_prime(algebra, prime_filter_from_model(algebra, alpha))
    assert verify_prime(
        algebra, prime_ideal_from_model(algebra, alpha), Polarity.IDEAL
    )


def test_generated_filter_is_not_prime():
    algebra = FreeAlgebra(["a", "b"])
    F = GeneratedFilter(algebra, [algebra.generator("a")])
    assert verify_filter(algebra, F)
    assert not verify_prime(algebra, F)
    assert len(F.members()) == 4
    assert check_filter_theory(F).holds


def test_filter_theory_roundtrip(consistent_theory, inconsistent_theory):
    assert check_roundtrip(consistent_theory).holds
    assert check_roundtrip(inconsistent_theory).holds
    T = theory_from_filter(TheoryFilter(consistent_theory))
    assert Sequent.of([], [0, 1]) in T.clauses


@given(st.randoms(use_true_random=False))
def test_canon_is_homomorphism(rng: random.Random):
    algebra = FreeAlgebra(NAMES)
    e1 = random_expr(rng, NAMES, 4)
    e2 = random_expr(rng, NAMES, 4)
    c1, c2 = algebra.canon(e1), algebra.canon(e2)
    assert algebra.canon(e1 & e2) == (c1 & c2)
    assert algebra.canon(e1 | e2) == (c1 | c2)
    assert algebra.canon(~e1) == ~c1
    for k in range(8):
        env = {name: k >> i & 1 for i, name in enumerate(NAMES)}
        assert c1.value_at(k) == e1.evaluate(env)
