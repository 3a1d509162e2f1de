import pytest

from wellfound.errors import (
    DepthExceededError,
    InvalidArgumentsError,
    InvalidElementError,
)
from wellfound.seqcore import (
    Alphabet,
    Branch,
    SeqU,
    all_branches,
    all_sequences,
    cons_branch,
    extend,
    is_prefix,
    prefix_of_branch,
)

B2 = Alphabet(2)


def test_alphabet_rejects_empty():
    with pytest.raises(InvalidArgumentsError):
        Alphabet(0)


def test_sequence_rejects_foreign_element():
    with pytest.raises(InvalidElementError):
        SeqU.of(B2, 0, 2)


def test_extend_and_concat():
    u = SeqU.of(B2, 1)
    assert extend(u, 0).items == (1, 0)
    assert u.concat(SeqU.of(B2, 0, 1)).items == (1, 0, 1)
    assert u.cons(0).items == (0, 1)
    with pytest.raises(InvalidElementError):
        extend(u, 5)


def test_is_prefix():
    assert is_prefix(SeqU.empty(B2), SeqU.of(B2, 1, 0))
    assert is_prefix(SeqU.of(B2, 1), SeqU.of(B2, 1, 0))
    assert not is_prefix(SeqU.of(B2, 0), SeqU.of(B2, 1, 0))
    assert not is_prefix(SeqU.of(B2, 1, 0, 1), SeqU.of(B2, 1, 0))


def test_prefix_of_branch():
    alpha = Branch(B2, (1, 0, 1))
    assert prefix_of_branch(SeqU.of(B2, 1, 0), alpha)
    assert not prefix_of_branch(SeqU.of(B2, 0), alpha)
    with pytest.raises(DepthExceededError):
        prefix_of_branch(SeqU.of(B2, 1, 0, 1, 1), alpha)


def test_branch_prefixes_and_cons():
    alpha = Branch(B2, (1, 1))
    assert [u.to_text() for u in alpha.prefixes()] == ["ε", "1", "11"]
    assert cons_branch(0, alpha).values == (0, 1, 1)
    assert alpha.tail().values == (1,)
    with pytest.raises(DepthExceededError):
        alpha.prefix(3)


def test_enumerations_have_expected_sizes():
    assert len(list(all_branches(Alphabet(3), 2))) == 9
    assert len(list(all_sequences(B2, 3))) == 15
    assert next(all_sequences(B2, 3)).length == 0


def test_text_forms():
    assert SeqU.from_text(B2, "101").items == (1, 0, 1)
    assert SeqU.empty(B2).to_text() == "ε"
    assert str(SeqU.of(B2, 1, 0)) == "⟨1,0⟩"
