"""
Hierarquia de exceções do wellfound
"""

from typing import Optional


class WellfoundError(Exception):
    """Erro base de todas as operações do pacote"""


class InvalidElementError(WellfoundError):
    """Elemento fora do alfabeto"""


class DepthExceededError(WellfoundError):
    """Sequência mais longa que a profundidade disponível"""


class DepthMismatchError(WellfoundError):
    """Árvore intensional incompatível com a profundidade do universo"""


class InvalidArgumentsError(WellfoundError):
    """Argumentos fora do domínio da operação"""


class UnknownPrincipleError(WellfoundError):
    """Nome de princípio desconhecido"""


class GeneratorLimitError(WellfoundError):
    """Número de geradores acima do limite configurado"""


class SizeLimitError(WellfoundError):
    """Instância grande demais para a camada exaustiva"""


class ConfigurationError(WellfoundError):
    """Configuração inválida"""


class UnknownSuiteError(WellfoundError):
    """Suíte de verificação desconhecida"""


class UnknownDemoError(WellfoundError):
    """Demonstração desconhecida"""


class ExpressionParseError(WellfoundError):
    """Erro de sintaxe em expressão booleana"""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (posição {position})")
        self.position = position


class InputFileError(WellfoundError):
    """Erro ao ler arquivo de teoria ou de predicado"""

    def __init__(
        self, message: str, line: Optional[int] = None, column: Optional[int] = None
    ):
        location = ""
        if line is not None:
            location = f" (linha {line}, coluna {column or 1})"
        super().__init__(f"{message}{location}")
        self.line = line
        self.column = column
