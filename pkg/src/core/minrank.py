"""
MINRANK - Oráculos Exatos para Instâncias Pequenas
Responsável por posto em GF(2), minrk2(G) sobre matrizes que encaixam em G,
partição mínima exata em cliques φ(K) e número de clique ω.
"""

from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

import numpy as np

from src.config import get_settings
from src.core.graphs import (
    DiGraph,
    UndirectedGraph,
    build_idc_graph,
    complement,
    iter_bits,
    lowest_bit,
    to_mask,
    underlying_graph,
)
from src.core.partition import CliquePartition
from src.errors import TooLarge


def _matrix_rows(m) -> List[int]:
    """Converte matriz 0/1 (numpy ou listas) em linhas bitset"""
    arr = np.asarray(m, dtype=np.uint8) % 2
    if arr.ndim != 2:
        raise ValueError("gf2_rank espera uma matriz 2D")
    return [sum(1 << int(j) for j in np.flatnonzero(row)) for row in arr]


def gf2_rank(m) -> int:
    """
    Posto sobre GF(2) por eliminação em bitsets

    Args:
        m: Matriz 0/1 (np.ndarray ou lista de listas) ou lista de linhas
           já em forma de bitset (int)

    Returns:
        Posto da matriz
    """
    if isinstance(m, np.ndarray) or (len(m) and not isinstance(m[0], (int, np.integer))):
        rows = _matrix_rows(m)
    else:
        rows = [int(r) for r in m]

    pivots: Dict[int, int] = {}
    for row in rows:
        while row:
            high = row.bit_length() - 1
            if high not in pivots:
                pivots[high] = row
                break
            row ^= pivots[high]
    return len(pivots)


@dataclass(frozen=True)
class FitMatrix:
    """Matriz A que encaixa em G: diagonal 1, entradas livres nos arcos"""

    vertices: Tuple[int, ...]
    free_positions: Tuple[Tuple[int, int], ...]
    assignment: Tuple[int, ...]

    @classmethod
    def for_graph(cls, g: DiGraph, assignment: Optional[Sequence[int]] = None) -> "FitMatrix":
        positions = tuple(g.arcs())
        if assignment is None:
            assignment = (0,) * len(positions)
        return cls(vertices=tuple(g.vertices()), free_positions=positions, assignment=tuple(assignment))

    @property
    def n(self) -> int:
        return len(self.vertices)

    def rows(self) -> List[int]:
        local = {v: idx for idx, v in enumerate(self.vertices)}
        rows = [1 << idx for idx in range(self.n)]
        for (i, j), bit in zip(self.free_positions, self.assignment):
            if bit:
                rows[local[i]] |= 1 << local[j]
        return rows

    def to_array(self) -> np.ndarray:
        arr = np.zeros((self.n, self.n), dtype=np.uint8)
        for r, row in enumerate(self.rows()):
            for c in iter_bits(row):
                arr[r, c] = 1
        return arr

    def rank(self) -> int:
        return gf2_rank(self.rows())


def _check_arcs(g: DiGraph, max_free: Optional[int]) -> None:
    cap = get_settings().minrank_max_free if max_free is None else max_free
    arcs = g.arc_count()
    if arcs > cap:
        raise TooLarge("arcos", arcs, cap)


def _reduce(vector: int, basis: Tuple[int, ...]) -> int:
    # basis em forma escalonada reduzida: cada pivô aparece numa única linha
    for row in basis:
        if (vector >> (row.bit_length() - 1)) & 1:
            vector ^= row
    return vector


def _insert(basis: Tuple[int, ...], reduced: int) -> Tuple[int, ...]:
    pivot = reduced.bit_length() - 1
    rows = [row ^ reduced if (row >> pivot) & 1 else row for row in basis]
    rows.append(reduced)
    return tuple(sorted(rows))


def minrk2_witness(g: DiGraph, max_free: Optional[int] = None) -> Tuple[int, FitMatrix]:
    """
    minrk2(G) exato com a matriz que atinge o mínimo

    Busca linha a linha sobre as escolhas de cada linha de A, memorizando
    (linha, espaço gerado). Uma escolha que já está no espaço gerado nunca
    perde para as demais.

    Args:
        g: Grafo de side information
        max_free: Limite de entradas livres (arcos); default da configuração

    Returns:
        Tupla (minrk2, FitMatrix testemunha)

    Raises:
        TooLarge: Se G tem mais arcos que o limite
    """
    _check_arcs(g, max_free)
    vertices = g.vertices()
    local = {v: idx for idx, v in enumerate(vertices)}
    free = [to_mask(local[j] for j in iter_bits(g.out[v])) for v in vertices]
    n = len(vertices)
    memo: Dict[Tuple[int, Tuple[int, ...]], Tuple[int, Tuple[int, ...]]] = {}

    def solve(r: int, basis: Tuple[int, ...]) -> Tuple[int, Tuple[int, ...]]:
        if r == n:
            return 0, ()
        key = (r, basis)
        if key in memo:
            return memo[key]

        spans: Dict[Tuple[int, ...], int] = {}
        inside = None
        sub = free[r]
        while True:
            row = (1 << r) | sub
            reduced = _reduce(row, basis)
            if reduced == 0:
                inside = row
                break
            spans.setdefault(_insert(basis, reduced), row)
            if sub == 0:
                break
            sub = (sub - 1) & free[r]

        if inside is not None:
            extra, chosen = solve(r + 1, basis)
            result = (extra, (inside,) + chosen)
        else:
            result = None
            for grown, row in spans.items():
                extra, chosen = solve(r + 1, grown)
                if result is None or extra + 1 < result[0]:
                    result = (extra + 1, (row,) + chosen)
        memo[key] = result
        return result

    rank, rows = solve(0, ())
    positions = tuple(g.arcs())
    assignment = tuple((rows[local[i]] >> local[j]) & 1 for i, j in positions)
    return rank, FitMatrix(vertices=tuple(vertices), free_positions=positions, assignment=assignment)


def minrk2(g: DiGraph, max_free: Optional[int] = None) -> int:
    """minrk2(G): menor posto em GF(2) entre as matrizes que encaixam em G"""
    return minrk2_witness(g, max_free)[0]


def minrk2_exhaustive(g: DiGraph, max_free: int = 16) -> Tuple[int, FitMatrix]:
    """
    Enumeração completa das 2^|E| atribuições em ordem de código Gray

    Args:
        g: Grafo de side information
        max_free: Limite de arcos

    Returns:
        Tupla (minrk2, FitMatrix testemunha)
    """
    _check_arcs(g, max_free)
    fit = FitMatrix.for_graph(g)
    rows = fit.rows()
    local = {v: idx for idx, v in enumerate(fit.vertices)}
    flips = [(local[i], 1 << local[j]) for i, j in fit.free_positions]

    assignment = [0] * len(flips)
    best = gf2_rank(rows)
    best_assignment = tuple(assignment)
    for step in range(1, 1 << len(flips)):
        bit = (step & -step).bit_length() - 1
        row, mask = flips[bit]
        rows[row] ^= mask
        assignment[bit] ^= 1
        rank = gf2_rank(rows)
        if rank < best:
            best = rank
            best_assignment = tuple(assignment)
    return best, FitMatrix(vertices=fit.vertices, free_positions=fit.free_positions, assignment=best_assignment)


def _live_cap(k: UndirectedGraph, cap: int) -> None:
    count = k.vertex_count()
    if count > cap:
        raise TooLarge("vértices", count, cap)


def _maximal_cliques_with(k: UndirectedGraph, v: int, within: int) -> List[int]:
    """Cliques maximais (dentro de `within`) que contêm v"""
    found: List[int] = []

    def expand(clique: int, candidates: int, excluded: int) -> None:
        if not candidates and not excluded:
            found.append(clique)
            return
        for u in iter_bits(candidates):
            expand(clique | (1 << u), candidates & k.adj[u], excluded & k.adj[u])
            candidates &= ~(1 << u)
            excluded |= 1 << u

    expand(1 << v, k.adj[v] & within, 0)
    return found


def exact_clique_partition_witness(
    k: UndirectedGraph, max_n: Optional[int] = None
) -> Tuple[int, CliquePartition]:
    """
    φ(K) exato com uma partição ótima

    Recursão memorizada sobre subconjuntos: o menor vértice restante fica
    numa clique maximal do restante (sobreposições são descartadas depois).

    Args:
        k: Grafo não-direcionado
        max_n: Limite de vértices; default da configuração

    Returns:
        Tupla (φ, CliquePartition ótima)

    Raises:
        TooLarge: Se K tem mais vértices que o limite
    """
    _live_cap(k, get_settings().partition_max_n if max_n is None else max_n)
    memo: Dict[int, Tuple[int, Tuple[int, ...]]] = {0: (0, ())}

    def solve(remaining: int) -> Tuple[int, Tuple[int, ...]]:
        if remaining in memo:
            return memo[remaining]
        v = lowest_bit(remaining)
        best = None
        for clique in _maximal_cliques_with(k, v, remaining):
            size, rest = solve(remaining & ~clique)
            if best is None or size + 1 < best[0]:
                best = (size + 1, (clique,) + rest)
        memo[remaining] = best
        return best

    size, cliques = solve(k.live)
    return size, CliquePartition.from_masks(cliques)


def exact_clique_partition(k: UndirectedGraph, max_n: Optional[int] = None) -> int:
    """φ(K): número mínimo de cliques que particionam K"""
    return exact_clique_partition_witness(k, max_n)[0]


def maximum_clique(k: UndirectedGraph, max_n: Optional[int] = None) -> FrozenSet[int]:
    """
    Clique máxima por Bron-Kerbosch com pivô e poda pelo tamanho

    Args:
        k: Grafo não-direcionado
        max_n: Limite de vértices; default da configuração

    Returns:
        Conjunto de vértices da clique máxima (vazio se K não tem vértices)
    """
    _live_cap(k, get_settings().clique_max_n if max_n is None else max_n)
    best = [0]

    def expand(clique: int, candidates: int, excluded: int) -> None:
        if not candidates:
            if not excluded and clique.bit_count() > best[0].bit_count():
                best[0] = clique
            return
        if clique.bit_count() + candidates.bit_count() <= best[0].bit_count():
            return
        pivot = max(iter_bits(candidates | excluded), key=lambda u: ((k.adj[u] & candidates).bit_count(), -u))
        for u in iter_bits(candidates & ~k.adj[pivot]):
            expand(clique | (1 << u), candidates & k.adj[u], excluded & k.adj[u])
            candidates &= ~(1 << u)
            excluded |= 1 << u

    expand(0, k.live, 0)
    return frozenset(iter_bits(best[0]))


def clique_number(k: UndirectedGraph, max_n: Optional[int] = None) -> int:
    """ω(K): tamanho da maior clique"""
    return len(maximum_clique(k, max_n))


def independence_lower_bound(g: DiGraph, max_n: Optional[int] = None) -> FrozenSet[int]:
    """
    Limite inferior ω(Ḡ): maior conjunto de vértices sem arco entre si

    Esse conjunto induz uma submatriz identidade em qualquer A que encaixa
    em G, então seu tamanho não excede minrk2(G).

    Args:
        g: Grafo de side information

    Returns:
        Vértices da clique máxima do complemento do grafo subjacente
    """
    return maximum_clique(complement(underlying_graph(g)), max_n)


def phi(g: DiGraph, max_n: Optional[int] = None) -> int:
    """φ(K) para K = build_idc_graph(G)"""
    return exact_clique_partition(build_idc_graph(g), max_n)
