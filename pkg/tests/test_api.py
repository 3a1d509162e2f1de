from unittest.mock import patch

from fastapi.testclient import TestClient

from api.main import app
from wellfound.suites import SUITES


def test_root(client):
    response = client.get("/")
    assert response.status_code == 200
    assert response.json()["health"] == "/health"


def test_health(client):
    response = client.get("/health")
    assert response.status_code == 200
    body = response.json()
    assert body["status"] == "healthy"
    assert body["suites"] == len(SUITES)


def test_solve_inconsistent(client):
    payload = {
        "atoms": ["a"],
        "clauses": [{"succedent": ["a"]}, {"antecedent": ["a"]}],
    }
    response = client.post("/solve", json=payload)
    assert response.status_code == 200
    assert response.json()["note"] == "INCONSISTENT"


def test_solve_with_heuristic(client):
    payload = {
        "atoms": ["a", "b"],
        "clauses": [{"succedent": ["a", "b"]}],
        "heuristic": True,
        "unit_propagation": True,
    }
    response = client.post("/solve", json=payload)
    assert response.status_code == 200
    assert response.json()["note"] == "CONSISTENT"


def test_solve_unknown_atom(client):
    payload = {"atoms": ["a"], "clauses": [{"antecedent": ["z"]}]}
    response = client.post("/solve", json=payload)
    assert response.status_code == 400
    assert "z" in response.json()["detail"]


def test_classify(client):
    payload = {"members": ["", "1", "11"], "alphabet": 2, "depth": 2}
    response = client.post("/classify", json=payload)
    assert response.status_code == 200
    witness = response.json()["witness"]
    assert witness["productive"]["witness"] == "11"
    assert witness["barred"]["holds"]


def test_classify_rejects_deep_member(client):
    payload = {"members": ["101"], "alphabet": 2, "depth": 2}
    response = client.post("/classify", json=payload)
    assert response.status_code == 400


def test_list_suites(client):
    response = client.get("/suites")
    assert response.status_code == 200
    assert response.json()["kl-ft"] == [c.__name__ for c in SUITES["kl-ft"]]


def test_check_suite(client):
    payload = {"alphabet": 2, "depth": 2, "samples": 10}
    response = client.post("/check/cc-ac", json=payload)
    assert response.status_code == 200
    body = response.json()
    assert body["summary"]["success"]
    assert len(body["reports"]) == len(SUITES["cc-ac"])


def test_check_unknown_suite(client):
    response = client.post("/check/bogus")
    assert response.status_code == 404
    assert response.json()["error"] == "Suíte desconhecida"


def test_check_invalid_config(client):
    response = client.post("/check/kl-ft", json={"depth": 0})
    assert response.status_code == 400


def test_demo(client):
    response = client.get("/demo/pigeonhole?m=4&n=3")
    assert response.status_code == 200
    assert response.json()["witness"]["max_size"] == 3


def test_demo_unknown(client):
    assert client.get("/demo/fantasma").status_code == 404


def test_demo_bounds(client):
    assert client.get("/demo/pigeonhole?m=9").status_code == 422


def test_canon(client):
    response = client.post("/expr/canon", json={"expression": "!x | y"})
    assert response.status_code == 200
    assert response.json() == {
        "generators": ["x", "y"],
        "bits": "1011",
        "expression": "!x | y",
    }


def test_canon_parse_error(client):
    response = client.post("/expr/canon", json={"expression": "x &"})
    assert response.status_code == 400


def test_unhandled_error():
    client = TestClient(app, raise_server_exceptions=False)
    with patch("api.main.canon_expression", side_effect=RuntimeError("boom")):
        response = client.post("/expr/canon", json={"expression": "x"})
    assert response.status_code == 500
    assert response.json()["detail"] == "boom"
