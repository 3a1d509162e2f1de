import json
import os
import sys

import pytest
from dotenv import load_dotenv
from fastapi.testclient import TestClient

sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), "..")))

from api.main import app
from wellfound.config import RunConfig
from wellfound.entailkit import ClauseTheory
from wellfound.predkit import Pred, Universe


@pytest.fixture(scope="session", autouse=True)
def load_env():
    """Carrega variáveis de ambiente do .env"""
    load_dotenv(os.path.join(os.path.dirname(__file__), "..", ".env"))


@pytest.fixture(autouse=True)
def clean_wellfound_env(monkeypatch):
    """Isola os testes de variáveis WELLFOUND_* do ambiente local"""
    for var in list(os.environ):
        if var.startswith("WELLFOUND_"):
            monkeypatch.delenv(var, raising=False)


@pytest.fixture
def client():
    """TestClient para FastAPI"""
    with TestClient(app) as c:
        yield c


@pytest.fixture
def small_config():
    """Universo U(2, 2): 7 nós, 128 predicados"""
    return RunConfig(alphabet=2, depth=2, samples=25, seed=7)


@pytest.fixture
def binary_universe():
    return Universe.of(2, 2)


@pytest.fixture
def spread_pred(binary_universe):
    """{ε, 1, 11}: um spread com o ramo 11"""
    return Pred.from_texts(binary_universe, ["", "1", "11"])


@pytest.fixture
def inconsistent_theory():
    """{a; ∅ ▷ {a}, {a} ▷ ∅}"""
    return ClauseTheory.from_names(["a"], [([], ["a"]), (["a"], [])])


@pytest.fixture
def consistent_theory():
    """{a, b; ∅ ▷ {a, b}}"""
    return ClauseTheory.from_names(["a", "b"], [([], ["a", "b"])])


@pytest.fixture
def theory_file(tmp_path):
    """Escreve um documento de teoria JSON e devolve o caminho"""

    def write(document, name="theory.json"):
        path = tmp_path / name
        path.write_text(json.dumps(document), encoding="utf-8")
        return str(path)

    return write


@pytest.fixture
def predicate_file(tmp_path):
    def write(text, name="pred.txt"):
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return str(path)

    return write
