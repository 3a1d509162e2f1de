"""
wellfound: procedimentos de decisão finitos para escolha dependente e indução por barra
"""

__version__ = "0.1.0"
