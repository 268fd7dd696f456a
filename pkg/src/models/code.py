"""
CODE MODEL - Símbolos Codificados, Index Code e Trace do Solver
"""

from typing import FrozenSet, List, Optional, Sequence, Tuple

from pydantic import BaseModel, ConfigDict, Field, field_validator

from src.models.instance import client_name, format_support, symbol_name


class CodedSymbol(BaseModel):
    """Combinação XOR de payloads (o suporte nunca é vazio)"""

    model_config = ConfigDict(frozen=True)

    support: FrozenSet[int]

    @field_validator("support")
    @classmethod
    def _non_empty(cls, value: FrozenSet[int]) -> FrozenSet[int]:
        if not value:
            raise ValueError("suporte de CodedSymbol não pode ser vazio")
        return value

    def __str__(self) -> str:
        return format_support(self.support)


class IndexCode(BaseModel):
    """Sequência ordenada de transmissões (a ordem importa na decodificação)"""

    model_config = ConfigDict(frozen=True)

    transmissions: Tuple[CodedSymbol, ...] = ()

    @classmethod
    def from_supports(cls, supports) -> "IndexCode":
        return cls(transmissions=tuple(CodedSymbol(support=frozenset(s)) for s in supports))

    @property
    def ell(self) -> int:
        return len(self.transmissions)

    def supports(self) -> List[FrozenSet[int]]:
        return [t.support for t in self.transmissions]

    def reversed(self) -> "IndexCode":
        return IndexCode(transmissions=tuple(reversed(self.transmissions)))

    def __str__(self) -> str:
        return "{" + ", ".join(str(t) for t in self.transmissions) + "}"


def _origin(origin: Optional[Sequence[int]], v: int) -> int:
    return v if origin is None else origin[v]


class IterationRecord(BaseModel):
    """Uma passada do laço do UCIC (ou o fallback do Step 5)"""

    model_config = ConfigDict(frozen=True)

    iteration: int
    chosen_clique: Optional[FrozenSet[int]] = None
    piggyback: Optional[int] = None
    gain: int = 0
    satisfied: FrozenSet[int] = frozenset()
    cache_gains: Tuple[Tuple[int, int], ...] = ()
    partition_size_r: int = 0
    fallback: bool = False
    transmissions: int = 1

    def to_line(
        self,
        symbol_origin: Optional[Sequence[int]] = None,
        client_origin: Optional[Sequence[int]] = None,
    ) -> str:
        """
        Registro de uma linha para o arquivo --trace

        Args:
            symbol_origin: Mapa símbolo reduzido → símbolo original (default: identidade)
            client_origin: Mapa cliente virtual → cliente original (default: identidade)
        """
        def sym(s: int) -> str:
            return symbol_name(_origin(symbol_origin, s))

        def cli(c: int) -> str:
            return client_name(_origin(client_origin, c))

        clique = format_support(_origin(symbol_origin, s) for s in self.chosen_clique) if self.chosen_clique else "-"
        pbs = sym(self.piggyback) if self.piggyback is not None else "-"
        satisfied = ",".join(cli(c) for c in sorted(self.satisfied)) or "-"
        gains = ",".join(f"{cli(m)}:{sym(s)}" for m, s in self.cache_gains) or "-"
        kind = "fallback" if self.fallback else "piggyback"
        return (
            f"iteration={self.iteration} kind={kind} Y_b={clique} pbs={pbs} "
            f"satisfied={satisfied} gains={gains} r={self.partition_size_r}"
        )


class SolveTrace(BaseModel):
    """Histórico completo das decisões de uma execução do UCIC"""

    iterations: List[IterationRecord] = Field(default_factory=list)
    fallback_used: bool = False
    dominance_guard_used: bool = False
    initial_partition_size: int = 0
    partitioner: str = ""

    def satisfied_clients(self) -> List[int]:
        clients: List[int] = []
        for record in self.iterations:
            clients.extend(sorted(record.satisfied))
        return clients

    def to_lines(
        self,
        symbol_origin: Optional[Sequence[int]] = None,
        client_origin: Optional[Sequence[int]] = None,
    ) -> List[str]:
        return [record.to_line(symbol_origin, client_origin) for record in self.iterations]
