"""
CODEC - Codificação XOR e Simulação de Decodificação
Responsável por gerar os frames de um IndexCode a partir dos payloads e por
simular, cliente a cliente, a decodificação sequencial que certifica o código.
"""

from dataclasses import dataclass, field
from typing import Dict, FrozenSet, List, Optional, Set, Tuple

import numpy as np

from src.config import get_settings
from src.errors import UnknownSymbol
from src.models.code import IndexCode
from src.models.instance import Instance


@dataclass(frozen=True)
class PayloadStore:
    """Payloads dos k símbolos: matriz uint8 de formato (k, b)"""

    payloads: np.ndarray

    @classmethod
    def random(cls, k: int, payload_size_bytes: int, seed: int) -> "PayloadStore":
        rng = np.random.Generator(np.random.PCG64(seed & ((1 << 64) - 1)))
        return cls(payloads=rng.integers(0, 256, size=(k, payload_size_bytes), dtype=np.uint8))

    @property
    def k(self) -> int:
        return self.payloads.shape[0]

    def payload(self, symbol: int) -> np.ndarray:
        if not 0 <= symbol < self.k:
            raise UnknownSymbol(symbol)
        return self.payloads[symbol]


@dataclass
class ClientState:
    """Conhecimento de um cliente durante a decodificação"""

    client: int
    known: Set[int]
    recovered_payloads: Dict[int, np.ndarray] = field(default_factory=dict)


@dataclass(frozen=True)
class DecodeReport:
    """Veredito do verificador"""

    valid: bool
    unsatisfied: Dict[int, FrozenSet[int]]
    mismatches: Tuple[Tuple[int, int], ...] = ()
    draws: int = 0


def encode(code: IndexCode, store: PayloadStore) -> List[np.ndarray]:
    """
    Gera um frame por transmissão: XOR byte a byte do suporte

    Args:
        code: Index code
        store: Payloads dos símbolos

    Returns:
        Lista de vetores uint8

    Raises:
        UnknownSymbol: Símbolo do suporte fora do store
    """
    frames = []
    for transmission in code.transmissions:
        symbols = sorted(transmission.support)
        stacked = np.stack([store.payload(s) for s in symbols])
        frames.append(np.bitwise_xor.reduce(stacked, axis=0))
    return frames


def _decode_frame(state: ClientState, support: FrozenSet[int], frame: np.ndarray) -> bool:
    missing = support - state.known
    if len(missing) != 1:
        return False
    (target,) = missing
    payload = frame.copy()
    for s in support:
        if s != target:
            payload ^= state.recovered_payloads[s]
    state.recovered_payloads[target] = payload
    state.known.add(target)
    return True


def simulate_decode(
    inst: Instance,
    code: IndexCode,
    frames: List[np.ndarray],
    store: PayloadStore,
    fixpoint: bool = False,
) -> List[ClientState]:
    """
    Simula a decodificação de cada cliente processando os frames em ordem

    Um cliente decodifica o frame quando falta exatamente um símbolo do
    suporte; o símbolo recuperado entra no cache e vale para os frames
    seguintes. Com fixpoint=True os frames são revarridos até estabilizar.

    Args:
        inst: Instância (has sets iniciais)
        code: Código transmitido
        frames: Frames alinhados com as transmissões
        store: Payloads verdadeiros (cada cliente começa com os do seu H_i)
        fixpoint: Modo diagnóstico com revarredura

    Returns:
        Estados finais, um por cliente
    """
    states = [
        ClientState(
            client=i,
            known=set(has),
            recovered_payloads={s: store.payload(s).copy() for s in has},
        )
        for i, has in enumerate(inst.has)
    ]
    supports = code.supports()

    for state in states:
        changed = True
        while changed:
            changed = False
            for support, frame in zip(supports, frames):
                if _decode_frame(state, support, frame):
                    changed = True
            if not fixpoint:
                break
    return states


def verify_code_valid(
    inst: Instance,
    code: IndexCode,
    draws: Optional[int] = None,
    seed: int = 0,
    fixpoint: Optional[bool] = None,
    payload_size_bytes: Optional[int] = None,
) -> DecodeReport:
    """
    Certifica o código simulando a decodificação com payloads aleatórios

    Args:
        inst: Instância original
        code: Código a verificar
        draws: Sorteios independentes de payload (default da configuração)
        seed: Semente base (o sorteio d usa seed + d)
        fixpoint: Decodificação com revarredura (default da configuração)
        payload_size_bytes: Sobrescreve o b da instância

    Returns:
        DecodeReport com clientes insatisfeitos e payloads divergentes

    Raises:
        UnknownSymbol: Código cita símbolo fora do universo da instância
    """
    settings = get_settings()
    draws = settings.payload_draws if draws is None else draws
    fixpoint = settings.decode_fixpoint if fixpoint is None else fixpoint
    size = payload_size_bytes or inst.payload_size_bytes

    outside = sorted({s for t in code.transmissions for s in t.support if not 0 <= s < inst.k})
    if outside:
        raise UnknownSymbol(outside[0])

    unsatisfied: Dict[int, FrozenSet[int]] = {}
    mismatches = set()
    for draw in range(draws):
        store = PayloadStore.random(inst.k, size, seed + draw)
        frames = encode(code, store)
        for state in simulate_decode(inst, code, frames, store, fixpoint=fixpoint):
            missing = frozenset(inst.want[state.client] - state.known)
            if missing:
                unsatisfied[state.client] = missing
            for s, payload in state.recovered_payloads.items():
                if not np.array_equal(payload, store.payload(s)):
                    mismatches.add((state.client, s))

    return DecodeReport(
        valid=not unsatisfied and not mismatches,
        unsatisfied=dict(sorted(unsatisfied.items())),
        mismatches=tuple(sorted(mismatches)),
        draws=draws,
    )
