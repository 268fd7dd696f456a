"""
PARTITION - Heurísticas de Partição Mínima em Cliques
Responsável pelas partições de K usadas no Step 1 do UCIC e como
baselines: LDG, color saving e greedy simples.
Empates sempre resolvidos pelo menor id de vértice/clique.
"""

from dataclasses import dataclass
from typing import Callable, Dict, FrozenSet, Iterable, List, Tuple

import networkx as nx

from src.core.graphs import UndirectedGraph, iter_bits, lowest_bit, to_mask
from src.errors import UnknownAlgorithm
from src.models.instance import format_support


@dataclass(frozen=True)
class CliquePartition:
    """Q = {Y_1 ... Y_r}, cliques ordenadas pelo menor vértice"""

    cliques: Tuple[FrozenSet[int], ...]

    @classmethod
    def from_masks(cls, masks: Iterable[int]) -> "CliquePartition":
        cliques = [frozenset(iter_bits(m)) for m in masks if m]
        return cls(cliques=tuple(sorted(cliques, key=min)))

    @property
    def r(self) -> int:
        return len(self.cliques)

    def minimum_cliques(self) -> List[FrozenSet[int]]:
        """β: todas as cliques de tamanho mínimo, na ordem da partição"""
        if not self.cliques:
            return []
        smallest = min(len(c) for c in self.cliques)
        return [c for c in self.cliques if len(c) == smallest]

    def __str__(self) -> str:
        return "{" + ", ".join("{" + format_support(c) + "}" for c in self.cliques) + "}"


Partitioner = Callable[[UndirectedGraph], CliquePartition]


def ldg_partition(k: UndirectedGraph) -> CliquePartition:
    """
    Least Difference Greedy

    Processa os vértices em ordem crescente; cada vértice entra na clique
    aberta (com todos os membros adjacentes a ele) cuja vizinhança comum
    mais se parece com a sua, isto é, que maximiza |N(v) ∩ ∩N(u)|.
    Sem clique compatível, abre uma nova.

    Args:
        k: Grafo IDC

    Returns:
        CliquePartition determinística
    """
    members: List[int] = []
    common: List[int] = []

    for v in iter_bits(k.live):
        nv = k.adj[v]
        best = None
        best_score = -1
        for idx, (clique, shared) in enumerate(zip(members, common)):
            if clique & ~nv:
                continue
            score = (nv & shared).bit_count()
            if score > best_score:
                best, best_score = idx, score
        if best is None:
            members.append(1 << v)
            common.append(nv)
        else:
            members[best] |= 1 << v
            common[best] &= nv

    return CliquePartition.from_masks(members)


def greedy_partition(k: UndirectedGraph) -> CliquePartition:
    """Semente no menor vértice livre, cresce com o menor vizinho comum"""
    remaining = k.live
    cliques = []
    while remaining:
        seed = lowest_bit(remaining)
        clique = 1 << seed
        candidates = k.adj[seed] & remaining
        while candidates:
            v = lowest_bit(candidates)
            clique |= 1 << v
            candidates &= k.adj[v]
        cliques.append(clique)
        remaining &= ~clique
    return CliquePartition.from_masks(cliques)


def _grow(k: UndirectedGraph, clique: int, candidates: int) -> int:
    # escolhe o candidato com mais vizinhos entre os candidatos
    while candidates:
        best = max(iter_bits(candidates), key=lambda u: ((k.adj[u] & candidates).bit_count(), -u))
        clique |= 1 << best
        candidates &= k.adj[best]
    return clique


def _common_neighbors(k: UndirectedGraph, clique: int, remaining: int) -> int:
    mask = remaining
    for u in iter_bits(clique):
        mask &= k.adj[u]
    return mask


def _one_swap(k: UndirectedGraph, clique: int, remaining: int) -> int:
    """Busca local: troca um membro por um vértice de fora e volta a crescer"""
    improved = True
    while improved:
        improved = False
        size = clique.bit_count()
        for x in iter_bits(clique):
            rest = clique & ~(1 << x)
            shared = _common_neighbors(k, rest, remaining)
            for y in iter_bits(shared & ~clique):
                grown = _grow(k, rest | (1 << y), shared & k.adj[y] & ~(rest | (1 << y)))
                if grown.bit_count() > size:
                    clique = grown
                    improved = True
                    break
            if improved:
                break
    return clique


def _largest_clique(k: UndirectedGraph, remaining: int) -> int:
    best = 0
    for seed in iter_bits(remaining):
        clique = _grow(k, 1 << seed, k.adj[seed] & remaining)
        clique = _one_swap(k, clique, remaining)
        if clique.bit_count() > best.bit_count():
            best = clique
    return best


def _lexicographic_max_matching(k: UndirectedGraph, remaining: int) -> List[int]:
    """Emparelhamento máximo lexicograficamente menor sobre `remaining`"""
    graph = nx.Graph()
    graph.add_nodes_from(iter_bits(remaining))
    graph.add_edges_from(
        (u, v) for u in iter_bits(remaining) for v in iter_bits(k.adj[u] & remaining) if u < v
    )
    target = len(nx.max_weight_matching(graph, maxcardinality=True))
    pairs = []
    for u, v in sorted(graph.edges()):
        if target == 0:
            break
        u, v = min(u, v), max(u, v)
        if u not in graph or v not in graph:
            continue
        rest = graph.copy()
        rest.remove_nodes_from((u, v))
        if len(nx.max_weight_matching(rest, maxcardinality=True)) == target - 1:
            pairs.append((1 << u) | (1 << v))
            graph = rest
            target -= 1
    return pairs


def color_saving_partition(k: UndirectedGraph) -> CliquePartition:
    """
    Color saving em três fases

    1. extrai repetidamente a maior clique (tamanho >= 3) encontrada por
       crescimento guloso + busca local com uma troca;
    2. emparelhamento máximo no restante (pares adjacentes viram 2-cliques);
    3. os vértices que sobram ficam como singletons.

    Args:
        k: Grafo IDC

    Returns:
        CliquePartition determinística
    """
    remaining = k.live
    cliques = []

    while remaining:
        clique = _largest_clique(k, remaining)
        if clique.bit_count() < 3:
            break
        cliques.append(clique)
        remaining &= ~clique

    for pair in _lexicographic_max_matching(k, remaining):
        cliques.append(pair)
        remaining &= ~pair

    cliques.extend(1 << v for v in iter_bits(remaining))
    return CliquePartition.from_masks(cliques)


def verify_partition(k: UndirectedGraph, p: CliquePartition) -> List[str]:
    """
    Confere disjunção, cobertura e a propriedade de clique

    Args:
        k: Grafo de referência
        p: Partição a verificar

    Returns:
        Lista de violações (vazia se a partição é válida)
    """
    violations: List[str] = []
    seen = 0
    for u, clique in enumerate(p.cliques):
        label = "{" + format_support(clique) + "}" if clique else "{}"
        if not clique:
            violations.append(f"Y{u + 1} vazia")
            continue
        mask = to_mask(clique)
        dead = [v for v in clique if not (0 <= v < k.n and (k.live >> v) & 1)]
        if dead:
            violations.append(f"Y{u + 1} {label} contém vértices inexistentes")
            continue
        for w, other in enumerate(p.cliques[:u]):
            if mask & to_mask(other):
                violations.append(f"Y{w + 1} e Y{u + 1} se sobrepõem")
        if not k.is_clique(mask):
            violations.append(f"Y{u + 1} {label} não é clique")
        seen |= mask

    missing = k.live & ~seen
    if missing:
        violations.append(f"vértices não cobertos: {format_support(iter_bits(missing))}")
    return violations


PARTITIONERS: Dict[str, Partitioner] = {
    "ldg": ldg_partition,
    "color-saving": color_saving_partition,
    "greedy": greedy_partition,
}


def get_partitioner(name: str) -> Partitioner:
    """Resolve o nome do algoritmo de partição"""
    try:
        return PARTITIONERS[name]
    except KeyError:
        known = ", ".join(PARTITIONERS)
        raise UnknownAlgorithm(f"partição desconhecida: {name!r} (disponíveis: {known})") from None
