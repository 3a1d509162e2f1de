"""
API FastAPI para as verificações do wellfound
"""

import logging
import os
from datetime import datetime, timezone
from typing import Any, Dict, List, Optional

import uvicorn
from fastapi import Depends, FastAPI, Query
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from pydantic import BaseModel, Field

from wellfound import __version__
from wellfound.commands import (
    canon_expression,
    classify_predicate,
    run_demo,
    solve,
)
from wellfound.config import RunConfig, get_config, merge_config
from wellfound.errors import UnknownDemoError, UnknownSuiteError, WellfoundError
from wellfound.formats import TheoryDocument, parse_predicate
from wellfound.foundkit import Boundary
from wellfound.predkit import Universe
from wellfound.report import Report
from wellfound.runner import SuiteRunner
from wellfound.suites import SUITES

# Configuração de logging
logging.basicConfig(
    level=logging.INFO,
    format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
)
logger = logging.getLogger(__name__)

# Criar aplicação FastAPI
app = FastAPI(
    title="wellfound API",
    description="Verificação de princípios de boa fundação em universos finitos",
    version=__version__,
    docs_url="/docs",
    redoc_url="/redoc",
)

# Configurar CORS
app.add_middleware(
    CORSMiddleware,
    allow_origins=["*"],
    allow_credentials=True,
    allow_methods=["*"],
    allow_headers=["*"],
)


# Modelos Pydantic
class SolveRequest(TheoryDocument):
    """Teoria de cláusulas com as opções do provador"""

    heuristic: bool = Field(False, description="Escolha de átomo por frequência")
    unit_propagation: bool = Field(False, description="Preferir cláusulas unitárias")


class ClassifyRequest(BaseModel):
    """Predicado listado como strings de dígitos"""

    members: List[str] = Field(default_factory=list, description="Sequências membro")
    alphabet: int = Field(2, ge=1, description="Tamanho do alfabeto B")
    depth: int = Field(3, ge=1, description="Profundidade d")
    boundary: Boundary = Field(Boundary.OPEN, description="Convenção nas folhas")


class CheckRequest(BaseModel):
    """Parâmetros opcionais de uma execução de suíte"""

    alphabet: Optional[int] = Field(None, description="Tamanho do alfabeto B")
    depth: Optional[int] = Field(None, description="Profundidade d")
    boundary: Optional[Boundary] = Field(None, description="Convenção nas folhas")
    samples: Optional[int] = Field(None, description="Instâncias aleatórias")
    seed: Optional[int] = Field(None, description="Semente")


class CheckResponse(BaseModel):
    """Reports de uma suíte e o relatório de execução"""

    reports: List[Report] = Field(..., description="Um Report por teorema")
    summary: Dict[str, Any] = Field(..., description="Relatório de execução")


class CanonRequest(BaseModel):
    expression: str = Field(..., description="Expressão com !, &, |, T, F e parênteses")
    generators: Optional[List[str]] = Field(
        None, description="Ordem dos geradores (padrão: alfabética)"
    )


class CanonResponse(BaseModel):
    generators: List[str] = Field(..., description="Geradores, na ordem dos bits")
    bits: str = Field(..., description="Tabela-verdade, valoração 0 primeiro")
    expression: str = Field(..., description="Expressão normalizada")


class HealthResponse(BaseModel):
    """Modelo de resposta para status de saúde"""

    status: str = Field(..., description="Status da API")
    timestamp: str = Field(..., description="Timestamp da verificação")
    suites: int = Field(..., description="Suítes registradas")
    version: str = Field(..., description="Versão da API")


class ErrorResponse(BaseModel):
    """Modelo de resposta para erros"""

    error: str = Field(..., description="Mensagem de erro")
    detail: Optional[str] = Field(None, description="Detalhes do erro")
    timestamp: str = Field(..., description="Timestamp do erro")


# Dependência para configuração base
def get_run_config() -> RunConfig:
    """Configuração lida do ambiente; os campos da requisição têm precedência"""
    return get_config()


def _error(status_code: int, error: str, exc: Exception) -> JSONResponse:
    return JSONResponse(
        status_code=status_code,
        content=ErrorResponse(
            error=error,
            detail=str(exc),
            timestamp=datetime.now(timezone.utc).isoformat(),
        ).model_dump(),
    )


# Endpoints
@app.get("/", response_model=Dict[str, str])
async def root():
    """Endpoint raiz da API"""
    return {
        "message": "wellfound API",
        "version": __version__,
        "docs": "/docs",
        "health": "/health",
    }


@app.get("/health", response_model=HealthResponse)
async def health_check():
    """Endpoint para verificação de saúde da API"""
    return HealthResponse(
        status="healthy",
        timestamp=datetime.now(timezone.utc).isoformat(),
        suites=len(SUITES),
        version=__version__,
    )


@app.post("/solve", response_model=Report)
def solve_theory(request: SolveRequest):
    """
    Decide a consistência de uma teoria de cláusulas

    Returns:
        Report: CONSISTENT com modelo, ou INCONSISTENT com derivação
    """
    theory = request.to_theory()
    logger.info(f"Resolvendo teoria com {theory.size} átomos")
    return solve(theory, request.heuristic, request.unit_propagation)


@app.post("/classify", response_model=Report)
def classify_members(request: ClassifyRequest):
    """
    Classifica um predicado dado por seus membros

    Returns:
        Report: Veredito e testemunha de cada propriedade
    """
    universe = Universe.of(request.alphabet, request.depth)
    # "" é a sequência vazia, que o leitor de arquivos só aceita como ε
    text = "\n".join(member or "ε" for member in request.members)
    predicate = parse_predicate(text, universe)
    return classify_predicate(predicate, request.boundary)


@app.get("/suites", response_model=Dict[str, List[str]])
async def list_suites():
    """Suítes registradas e suas verificações"""
    return {
        name: [check.__name__ for check in checks] for name, checks in SUITES.items()
    }


@app.post("/check/{suite}", response_model=CheckResponse)
def check_suite(
    suite: str,
    request: Optional[CheckRequest] = None,
    base: RunConfig = Depends(get_run_config),
):
    """
    Executa uma suíte de teoremas

    Args:
        suite: Nome da suíte ou "all"

    Returns:
        CheckResponse: Reports e relatório de execução
    """
    overrides = request.model_dump() if request else {}
    config = merge_config(base, command="check", workers=1, **overrides)
    summary = SuiteRunner(config).run([suite])
    reports = summary.pop("reports")
    return CheckResponse(reports=reports, summary=summary)


@app.get("/demo/{name}", response_model=Report)
def demo(
    name: str,
    m: int = Query(3, ge=1, le=6, description="|A| no pigeonhole"),
    n: int = Query(2, ge=1, le=5, description="|B| no pigeonhole"),
    base: RunConfig = Depends(get_run_config),
):
    """Demonstrações narradas: pigeonhole ou realiser"""
    return run_demo(name, base, m, n)


@app.post("/expr/canon", response_model=CanonResponse)
def canon_endpoint(
    request: CanonRequest, base: RunConfig = Depends(get_run_config)
):
    """Forma canônica (tabela-verdade) de uma expressão booleana"""
    report = canon_expression(
        request.expression, request.generators, base.max_generators
    )
    return CanonResponse(expression=report.note, **report.witness)


# Handlers de exceções
@app.exception_handler(UnknownSuiteError)
async def unknown_suite_handler(request, exc):
    return _error(404, "Suíte desconhecida", exc)


@app.exception_handler(UnknownDemoError)
async def unknown_demo_handler(request, exc):
    return _error(404, "Demonstração desconhecida", exc)


@app.exception_handler(WellfoundError)
async def wellfound_error_handler(request, exc):
    logger.warning(f"Requisição inválida: {exc}")
    return _error(400, "Requisição inválida", exc)


@app.exception_handler(Exception)
async def global_exception_handler(request, exc):
    """Handler global para exceções não tratadas"""
    logger.error(f"Erro não tratado: {exc}")
    return _error(500, "Erro interno do servidor", exc)


# Configuração para execução
def create_app():
    """Factory function para criar a aplicação"""
    return app


if __name__ == "__main__":
    # Configurações do servidor
    host = os.getenv("API_HOST", "0.0.0.0")
    port = int(os.getenv("API_PORT", "8000"))
    debug = os.getenv("DEBUG", "false").lower() == "true"

    logger.info(f"Iniciando API em {host}:{port}")

    uvicorn.run("api.main:app", host=host, port=port, reload=debug, log_level="info")
