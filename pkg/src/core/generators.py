"""
GENERATORS - Geradores de Instâncias
Responsável pelas famílias sorteadas (random, single-uniprior), pelas
famílias de ℓ* quase extremo e pelas fixtures de exemplo.

PRNG: numpy PCG64; o cliente i da família random usa a semente seed ^ i.
"""

from pathlib import Path
from typing import List, Literal, Optional, Sequence, Tuple

import numpy as np
from pydantic import BaseModel, Field, ValidationError

from src.core.graphs import build_info_flow_graph, scc_decompose
from src.errors import BadFamilyParams, NotSingleUniprior, UnknownFixture
from src.models.instance import Instance

FIXTURES_DIR = Path(__file__).resolve().parent.parent / "models" / "fixtures"
FIXTURE_NAMES = ("motivating", "alice-bob", "future-work")
NEAR_EXTREME_FAMILIES = ("complete", "star", "edgeless", "matching2-noF")

Family = Literal["random", "single-uniprior", "complete", "star", "edgeless", "matching2-noF", "fixture"]


class GenSpec(BaseModel):
    """Parâmetros de geração de uma instância"""

    family: Family = "random"
    n: int = Field(1, ge=0)
    p_has: float = Field(0.0, ge=0.0, le=1.0)
    seed: int = 0
    fixture_name: Optional[str] = None

    @classmethod
    def from_options(cls, **options) -> "GenSpec":
        """
        Monta o GenSpec a partir de opções soltas (CLI)

        Raises:
            BadFamilyParams: Parâmetro fora do domínio
        """
        try:
            return cls(**options)
        except ValidationError as e:
            first = e.errors()[0]
            field = ".".join(str(part) for part in first["loc"])
            raise BadFamilyParams(f"{field}: {first['msg']}") from e


UINT64_MASK = (1 << 64) - 1


def _rng(seed: int) -> np.random.Generator:
    # sementes negativas ou maiores que 64 bits dobram para uint64
    return np.random.Generator(np.random.PCG64(seed & UINT64_MASK))


def gen_random(n: int, p_has: float, seed: int) -> Instance:
    """
    Instância single-unicast com has sets sorteados

    Args:
        n: Quantidade de clientes (>= 1)
        p_has: Probabilidade de cada p_j (j != i) estar em H_i
        seed: Semente

    Returns:
        Instance com W_i = {p_i}
    """
    if n < 1 or not 0.0 <= p_has <= 1.0:
        raise BadFamilyParams(f"random exige n >= 1 e 0 <= p_has <= 1 (n={n}, p_has={p_has})")
    has_sets = []
    for i in range(n):
        draws = _rng(seed ^ i).random(n)
        has_sets.append({j for j in range(n) if j != i and draws[j] < p_has})
    return Instance.single_unicast(has_sets)


def _cycle_count(perm: Sequence[int]) -> int:
    seen = [False] * len(perm)
    cycles = 0
    for start in range(len(perm)):
        if seen[start]:
            continue
        cycles += 1
        v = start
        while not seen[v]:
            seen[v] = True
            v = perm[v]
    return cycles


def single_uniprior_from_permutation(perm: Sequence[int]) -> Tuple[Instance, int]:
    """
    Instância single-uniprior: H_i = {p_π(i)}, W_i = {p_i}

    Args:
        perm: Permutação sem pontos fixos de range(n)

    Returns:
        Tupla (instância, ξ = número de ciclos de π)
    """
    perm = [int(x) for x in perm]
    n = len(perm)
    if n < 2 or sorted(perm) != list(range(n)):
        raise BadFamilyParams(f"permutação inválida: {perm}")
    if any(perm[i] == i for i in range(n)):
        raise BadFamilyParams("permutação com ponto fixo (cliente já teria o que quer)")
    return Instance.single_unicast([{perm[i]} for i in range(n)]), _cycle_count(perm)


def gen_single_uniprior(n: int, seed: int) -> Tuple[Instance, int]:
    """Sorteia uma permutação sem pontos fixos (rejeição) e monta a instância"""
    if n < 2:
        raise BadFamilyParams(f"single-uniprior exige n >= 2 (n={n})")
    rng = _rng(seed)
    while True:
        perm = rng.permutation(n)
        if not np.any(perm == np.arange(n)):
            return single_uniprior_from_permutation(perm)


def single_uniprior_cycles(inst: Instance) -> int:
    """
    ξ de uma instância single-uniprior: componentes do grafo de fluxo I

    Raises:
        NotSingleUniprior: Has sets não são singletons disjuntos
    """
    if any(len(h) != 1 for h in inst.has) or len(set().union(*inst.has)) != inst.n:
        raise NotSingleUniprior("cada H_i deve ser um singleton distinto")
    return len(scc_decompose(build_info_flow_graph(inst)))


def gen_near_extreme(family: str, n: int, seed: int) -> Instance:
    """
    Famílias com ℓ* quase extremo

    - complete: side information simétrica completa (ℓ* = 1)
    - star: centro troca com todas as folhas, folhas não trocam entre si
    - edgeless: H_i vazio (ℓ* = n)
    - matching2-noF: K com exatamente dois pares disjuntos (ℓ* = n - 2)

    Args:
        family: Nome da família
        n: Quantidade de clientes
        seed: Semente (escolha do centro / dos pares)

    Returns:
        Instance single-unicast

    Raises:
        BadFamilyParams: Família desconhecida ou n incompatível
    """
    if family not in NEAR_EXTREME_FAMILIES:
        raise BadFamilyParams(f"família desconhecida: {family!r}")
    if n < 1:
        raise BadFamilyParams(f"{family} exige n >= 1")
    rng = _rng(seed)

    if family == "complete":
        has_sets = [set(range(n)) - {i} for i in range(n)]
    elif family == "edgeless":
        has_sets = [set() for _ in range(n)]
    elif family == "star":
        if n < 2:
            raise BadFamilyParams("star exige n >= 2")
        center = int(rng.integers(n))
        has_sets = [{center} for _ in range(n)]
        has_sets[center] = set(range(n)) - {center}
    else:
        if n < 6:
            raise BadFamilyParams(f"matching2-noF exige n >= 6 (n={n})")
        a, b, c, d = (int(x) for x in rng.choice(n, size=4, replace=False))
        has_sets: List[set] = [set() for _ in range(n)]
        for u, v in ((a, b), (c, d)):
            has_sets[u].add(v)
            has_sets[v].add(u)

    return Instance.single_unicast(has_sets)


def fixture(name: str) -> Instance:
    """
    Carrega uma fixture de exemplo (motivating, alice-bob, future-work)

    Raises:
        UnknownFixture: Nome desconhecido
    """
    if name not in FIXTURE_NAMES:
        raise UnknownFixture(f"fixture desconhecida: {name!r} (disponíveis: {', '.join(FIXTURE_NAMES)})")
    from src.layers.raw_layer import RawLayer

    return RawLayer().load_instance(str(FIXTURES_DIR / f"{name}.json"))


def generate(spec: GenSpec) -> Instance:
    """Despacha o GenSpec para o gerador da família"""
    if spec.family == "fixture":
        if not spec.fixture_name:
            raise BadFamilyParams("family=fixture exige fixture_name")
        return fixture(spec.fixture_name)
    if spec.family == "random":
        return gen_random(spec.n, spec.p_has, spec.seed)
    if spec.family == "single-uniprior":
        return gen_single_uniprior(spec.n, spec.seed)[0]
    return gen_near_extreme(spec.family, spec.n, spec.seed)
