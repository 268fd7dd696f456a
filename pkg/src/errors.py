"""
ERRORS - Hierarquia de Exceções
Todas as falhas da biblioteca derivam de IndexCodingError
"""

from typing import Any, List, Optional


class IndexCodingError(Exception):
    """Erro base do pacote"""


class ParseError(IndexCodingError):
    """Arquivo de instância/código malformado"""

    def __init__(self, message: str, location: Optional[str] = None):
        self.location = location
        if location:
            message = f"{location}: {message}"
        super().__init__(message)


class InvalidInstance(IndexCodingError):
    """Instância viola uma ou mais invariantes"""

    def __init__(self, violations: List[str]):
        self.violations = list(violations)
        super().__init__("; ".join(self.violations) or "instância inválida")


class MulticastInput(IndexCodingError):
    """Símbolo pedido por mais de um cliente"""

    def __init__(self, symbol: int, clients: List[int]):
        self.symbol = symbol
        self.clients = list(clients)
        names = ", ".join(f"c{c + 1}" for c in clients)
        super().__init__(f"símbolo p{symbol + 1} pedido por mais de um cliente ({names})")


class NotSingleUnicast(IndexCodingError):
    """Instância não está na forma k=n, W_i={p_i}"""


class NotSingleUniprior(IndexCodingError):
    """Has sets não são singletons disjuntos"""


class UnknownVertex(IndexCodingError):
    """Vértice ausente (já removido ou fora do intervalo)"""

    def __init__(self, vertex: int):
        self.vertex = vertex
        super().__init__(f"vértice v{vertex + 1} não existe no grafo")


class UnknownSymbol(IndexCodingError):
    """Símbolo fora do PayloadStore"""

    def __init__(self, symbol: int):
        self.symbol = symbol
        super().__init__(f"símbolo p{symbol + 1} não existe no payload store")


class UnknownFixture(IndexCodingError):
    """Nome de fixture desconhecido"""


class UnknownAlgorithm(IndexCodingError):
    """Nome de algoritmo desconhecido"""


class BadFamilyParams(IndexCodingError):
    """Parâmetros incompatíveis com a família de gerador"""


class TooLarge(IndexCodingError):
    """Entrada excede o limite configurado de um oráculo exato"""

    def __init__(self, what: str, size: int, cap: int):
        self.what = what
        self.size = size
        self.cap = cap
        super().__init__(f"{what}={size} excede o limite {cap}")


class InvalidCodeProduced(IndexCodingError):
    """Um algoritmo produziu código que não decodifica"""

    def __init__(self, message: str, trace: Any = None):
        self.trace = trace
        super().__init__(message)
