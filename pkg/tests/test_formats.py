import json

import pytest

from wellfound.approxkit import pigeonhole_demo
from wellfound.entailkit import Sequent, Valuation, derivable
from wellfound.errors import InputFileError
from wellfound.formats import (
    branch_to_text,
    load_predicate,
    load_theory,
    parse_predicate,
    parse_theory,
    sequent_to_text,
    theory_to_document,
    witness_to_payload,
)
from wellfound.seqcore import Alphabet, Branch


def test_parse_theory(consistent_theory):
    text = json.dumps(
        {"atoms": ["a", "b"], "clauses": [{"antecedent": [], "succedent": ["a", "b"]}]}
    )
    assert parse_theory(text) == consistent_theory


def test_document_reads_back(inconsistent_theory):
    text = json.dumps(theory_to_document(inconsistent_theory))
    assert parse_theory(text) == inconsistent_theory


def test_invalid_json_reports_position():
    with pytest.raises(InputFileError) as excinfo:
        parse_theory('{"atoms": ["a"],\n "clauses": [}')
    assert excinfo.value.line == 2


def test_schema_error():
    with pytest.raises(InputFileError, match="atoms"):
        parse_theory('{"clauses": []}')


def test_unknown_atom():
    with pytest.raises(InputFileError, match="Átomo desconhecido"):
        parse_theory('{"atoms": ["a"], "clauses": [{"antecedent": ["z"]}]}')


def test_load_theory_missing_file(tmp_path):
    with pytest.raises(InputFileError):
        load_theory(tmp_path / "nada.json")


def test_parse_predicate(binary_universe, spread_pred):
    text = "# spread\nε\n1   # ramo da direita\n11\n"
    assert parse_predicate(text, binary_universe) == spread_pred


def test_predicate_foreign_digit(binary_universe):
    with pytest.raises(InputFileError) as excinfo:
        parse_predicate("1\n  02\n", binary_universe)
    assert (excinfo.value.line, excinfo.value.column) == (2, 4)


def test_predicate_too_deep(binary_universe):
    with pytest.raises(InputFileError) as excinfo:
        parse_predicate("101", binary_universe)
    assert excinfo.value.column == 3


def test_load_predicate(predicate_file, binary_universe):
    path = predicate_file("<>\n0\n")
    assert load_predicate(path, binary_universe).to_texts() == ["ε", "0"]


def test_witness_payloads(inconsistent_theory, spread_pred):
    assert witness_to_payload(Branch(Alphabet(2), (1, 0))) == "10"
    assert branch_to_text(Branch(Alphabet(2), (0, 1, 1))) == "011"
    assert witness_to_payload(Valuation((1, 0)), ["a", "b"]) == {"a": 1, "b": 0}
    assert witness_to_payload(spread_pred) == ["ε", "1", "11"]
    record = witness_to_payload(
        derivable(inconsistent_theory, Sequent()), inconsistent_theory.atoms
    )
    assert record["rule"] == "CUT"
    assert [p["rule"] for p in record["premises"]] == ["AXT", "AXT"]
    assert witness_to_payload(pigeonhole_demo(3, 2))["max_size"] == 2


def test_sequent_text():
    assert sequent_to_text(Sequent.of([0], [1]), ["a", "b"]) == "a ▷ b"
    assert sequent_to_text(Sequent()) == "∅ ▷ ∅"
    assert sequent_to_text(Sequent.of([], [0]), ["a"]) == "∅ ▷ a"
    assert witness_to_payload(Sequent.of([0, 1], []), ["a", "b"]) == "a, b ▷ ∅"
