"""
INSTANCE MODEL - Modelo do Problema de Index Coding
Define a instância (clientes, has sets, want sets), o esquema do arquivo
JSON e utilitários de nomes de símbolos (p1, p2, ...)
"""

import re
from fractions import Fraction
from typing import FrozenSet, List, Tuple

from pydantic import BaseModel, ConfigDict, Field

SYMBOL_PATTERN = re.compile(r"^p([1-9][0-9]*)$")


def symbol_name(symbol: int) -> str:
    """Converte id interno (0-based) para o nome do arquivo (p1, p2, ...)"""
    return f"p{symbol + 1}"


def client_name(client: int) -> str:
    """Converte id interno de cliente para c1, c2, ..."""
    return f"c{client + 1}"


def parse_symbol_name(name: str) -> int:
    """
    Converte nome de símbolo (p1, p2, ...) para id interno 0-based

    Args:
        name: Nome do símbolo

    Returns:
        Id inteiro do símbolo

    Raises:
        ValueError: Se o nome não segue o padrão p<inteiro positivo>
    """
    match = SYMBOL_PATTERN.match(name) if isinstance(name, str) else None
    if match is None:
        raise ValueError(f"nome de símbolo inválido: {name!r}")
    return int(match.group(1)) - 1


def format_support(support) -> str:
    """Formata um conjunto de símbolos como p1⊕p2⊕..."""
    return "⊕".join(symbol_name(s) for s in sorted(support))


class Instance(BaseModel):
    """Instância imutável: n clientes, k símbolos, H_i e W_i por cliente"""

    model_config = ConfigDict(frozen=True)

    n: int = Field(..., ge=0, description="Quantidade de clientes")
    k: int = Field(..., ge=0, description="Quantidade de símbolos")
    has: Tuple[FrozenSet[int], ...] = Field(..., description="H_i por cliente")
    want: Tuple[FrozenSet[int], ...] = Field(..., description="W_i por cliente")
    payload_size_bytes: int = Field(1, ge=1, description="b: bytes por símbolo")

    @classmethod
    def single_unicast(cls, has_sets, payload_size_bytes: int = 1) -> "Instance":
        """
        Cria instância single-unicast (k=n, W_i={p_i}) a partir dos has sets

        Args:
            has_sets: Lista de conjuntos de ids (0-based), um por cliente
            payload_size_bytes: Tamanho do payload

        Returns:
            Instance correspondente
        """
        has = tuple(frozenset(h) for h in has_sets)
        n = len(has)
        return cls(
            n=n,
            k=n,
            has=has,
            want=tuple(frozenset({i}) for i in range(n)),
            payload_size_bytes=payload_size_bytes,
        )

    def is_single_unicast(self) -> bool:
        """True se k=n e W_i={p_i} para todo cliente"""
        return (
            self.k == self.n
            and len(self.want) == self.n
            and all(w == frozenset({i}) for i, w in enumerate(self.want))
        )

    def with_payload_size(self, payload_size_bytes: int) -> "Instance":
        """Cópia com outro tamanho de payload"""
        return self.model_copy(update={"payload_size_bytes": payload_size_bytes})


def validate_instance(inst: Instance) -> List[str]:
    """
    Lista as violações das invariantes da instância

    Args:
        inst: Instância a validar

    Returns:
        Lista de descrições (vazia se a instância é válida)
    """
    violations: List[str] = []
    if len(inst.has) != inst.n or len(inst.want) != inst.n:
        violations.append(
            f"esperados {inst.n} clientes, encontrados has={len(inst.has)} want={len(inst.want)}"
        )

    for i, (has, want) in enumerate(zip(inst.has, inst.want)):
        name = client_name(i)
        for label, symbols in (("H", has), ("W", want)):
            outside = sorted(s for s in symbols if s < 0 or s >= inst.k)
            if outside:
                listed = ", ".join(f"p{s + 1}" for s in outside)
                violations.append(f"cliente {name}: {listed} em {label} fora de [p1, p{inst.k}]")
        both = sorted(has & want)
        if both:
            listed = ", ".join(symbol_name(s) for s in both)
            violations.append(f"cliente {name}: {listed} em W e em H ao mesmo tempo")

    return violations


def coding_gain(k: int, ell: int) -> Fraction:
    """
    Calcula o coding gain exato k/ℓ

    Args:
        k: Símbolos entregues
        ell: Comprimento do código

    Returns:
        Fração k/ℓ
    """
    if ell < 1:
        raise ValueError("ℓ deve ser >= 1")
    return Fraction(k, ell)


def format_gain(gain: Fraction) -> str:
    """Formata o ganho como '5/3 (1.6667)'"""
    return f"{gain.numerator}/{gain.denominator} ({float(gain):.4f})"


# Esquema do arquivo JSON de instância (campos desconhecidos são rejeitados)
class ClientEntry(BaseModel):
    model_config = ConfigDict(extra="forbid")

    has: List[str] = Field(default_factory=list)
    want: List[str] = Field(default_factory=list)


class InstanceFile(BaseModel):
    model_config = ConfigDict(extra="forbid")

    n: int = Field(..., ge=0)
    k: int = Field(..., ge=0)
    payload_size_bytes: int = Field(1, ge=1)
    clients: List[ClientEntry] = Field(default_factory=list)
