"""
Configuração de execução a partir de variáveis de ambiente e argumentos
"""

import logging
import os
from typing import Any, Dict, Optional

from dotenv import load_dotenv
from pydantic import BaseModel, Field, ValidationError, field_validator

from wellfound.errors import ConfigurationError
from wellfound.foundkit import Boundary

logger = logging.getLogger(__name__)

OUTPUT_FORMATS = ("human", "json-lines")

# Variável de ambiente de cada campo
ENV_VARS = {
    "alphabet": "WELLFOUND_ALPHABET",
    "depth": "WELLFOUND_DEPTH",
    "boundary": "WELLFOUND_BOUNDARY",
    "output_format": "WELLFOUND_FORMAT",
    "samples": "WELLFOUND_SAMPLES",
    "seed": "WELLFOUND_SEED",
    "workers": "WELLFOUND_WORKERS",
    "max_generators": "WELLFOUND_MAX_GENERATORS",
    "log_level": "WELLFOUND_LOG_LEVEL",
}


class RunConfig(BaseModel):
    """Parâmetros de uma execução da CLI ou da API"""

    command: Optional[str] = Field(None, description="Subcomando executado")
    input_path: Optional[str] = Field(None, description="Arquivo de entrada")
    alphabet: int = Field(2, ge=1, description="Tamanho do alfabeto B")
    depth: int = Field(3, ge=1, description="Profundidade d do universo")
    boundary: Boundary = Field(Boundary.OPEN, description="Convenção de fronteira")
    heuristic: bool = Field(False, description="Heurística de escolha de átomo")
    unit_propagation: bool = Field(False, description="Preferir cláusulas unitárias")
    output_format: str = Field("human", description="human ou json-lines")
    samples: int = Field(10_000, ge=1, description="Instâncias aleatórias")
    seed: int = Field(0, description="Semente do gerador aleatório")
    workers: int = Field(1, ge=1, description="Processos paralelos")
    max_generators: int = Field(16, ge=0, description="Limite de geradores da álgebra")
    log_level: str = Field("INFO", description="Nível de logging")

    @field_validator("output_format")
    @classmethod
    def _check_format(cls, value: str) -> str:
        if value not in OUTPUT_FORMATS:
            raise ValueError(f"formato deve ser um de {', '.join(OUTPUT_FORMATS)}")
        return value

    @field_validator("boundary", mode="before")
    @classmethod
    def _lower_boundary(cls, value: Any) -> Any:
        return value.lower() if isinstance(value, str) else value

    @field_validator("log_level")
    @classmethod
    def _check_level(cls, value: str) -> str:
        level = value.upper()
        if not isinstance(logging.getLevelName(level), int):
            raise ValueError(f"nível de logging desconhecido: {value}")
        return level


def get_config(**overrides: Any) -> RunConfig:
    """
    Recupera configurações do `.env`, das variáveis de ambiente e dos argumentos

    Args:
        **overrides: Valores explícitos; None é ignorado

    Returns:
        RunConfig: Configuração validada
    """
    load_dotenv()
    values: Dict[str, Any] = {}
    for name, var in ENV_VARS.items():
        raw = os.getenv(var)
        if raw is not None and raw != "":
            values[name] = raw
    values.update({k: v for k, v in overrides.items() if v is not None})

    config = _validate(values)
    logger.debug(f"Configuração carregada: {config.model_dump()}")
    return config


def merge_config(base: RunConfig, **overrides: Any) -> RunConfig:
    """Aplica valores explícitos sobre uma configuração já carregada"""
    values = base.model_dump()
    values.update({k: v for k, v in overrides.items() if v is not None})
    return _validate(values)


def _validate(values: Dict[str, Any]) -> RunConfig:
    try:
        return RunConfig(**values)
    except ValidationError as e:
        problems = "; ".join(
            f"{'.'.join(str(p) for p in err['loc'])}: {err['msg']}"
            for err in e.errors()
        )
        raise ConfigurationError(f"Configuração inválida: {problems}") from e
