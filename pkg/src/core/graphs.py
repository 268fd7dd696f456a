"""
GRAPHS - Visões em Grafo da Instância
Responsável por construir G (side information), K (IDC), o grafo de fluxo
de informação I, complementos, componentes fortemente conexas e a
atualização do Step 4b do UCIC.

Adjacências são bitsets (int) indexados pelos ids originais; vértices
removidos saem da máscara `live` e nunca são renumerados.
"""

from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, Iterator, List, Sequence, Tuple

import networkx as nx
from networkx.algorithms.isomorphism import GraphMatcher

from src.errors import NotSingleUnicast, UnknownVertex
from src.models.instance import Instance


def iter_bits(mask: int) -> Iterator[int]:
    """Percorre os índices dos bits ligados, do menor para o maior"""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def lowest_bit(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


@dataclass(frozen=True)
class DiGraph:
    """Digrafo com adjacência de saída em bitsets"""

    n: int
    out: Tuple[int, ...]
    live: int

    @classmethod
    def from_arcs(cls, n: int, arcs: Iterable[Tuple[int, int]], live: int = None):
        out = [0] * n
        for i, j in arcs:
            if i != j:
                out[i] |= 1 << j
        if live is None:
            live = (1 << n) - 1
        return cls(n=n, out=tuple(o & live if (live >> v) & 1 else 0 for v, o in enumerate(out)), live=live)

    def vertices(self) -> List[int]:
        return list(iter_bits(self.live))

    def vertex_count(self) -> int:
        return self.live.bit_count()

    def has_vertex(self, v: int) -> bool:
        return 0 <= v < self.n and bool((self.live >> v) & 1)

    def has_arc(self, i: int, j: int) -> bool:
        return self.has_vertex(i) and bool((self.out[i] >> j) & 1)

    def successors(self, v: int) -> List[int]:
        return list(iter_bits(self.out[v]))

    def in_masks(self) -> Tuple[int, ...]:
        """Bitsets de entrada (predecessores) de cada vértice"""
        incoming = [0] * self.n
        for i in iter_bits(self.live):
            for j in iter_bits(self.out[i]):
                incoming[j] |= 1 << i
        return tuple(incoming)

    def arcs(self) -> List[Tuple[int, int]]:
        return [(i, j) for i in iter_bits(self.live) for j in iter_bits(self.out[i])]

    def arc_count(self) -> int:
        return sum(self.out[i].bit_count() for i in iter_bits(self.live))

    def to_networkx(self) -> nx.DiGraph:
        graph = nx.DiGraph()
        graph.add_nodes_from(self.vertices())
        graph.add_edges_from(self.arcs())
        return graph


class SideInfoGraph(DiGraph):
    """G: arco i → j sse o cliente c_i tem o símbolo p_j"""


class InfoFlowGraph(DiGraph):
    """I: arco i → j sse o cliente c_i tem um símbolo que c_j quer"""


@dataclass(frozen=True)
class UndirectedGraph:
    """Grafo simples com adjacência simétrica em bitsets"""

    n: int
    adj: Tuple[int, ...]
    live: int

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Tuple[int, int]], live: int = None):
        adj = [0] * n
        if live is None:
            live = (1 << n) - 1
        for u, v in edges:
            if u != v and (live >> u) & 1 and (live >> v) & 1:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
        return cls(n=n, adj=tuple(adj), live=live)

    @classmethod
    def complete(cls, n: int):
        full = (1 << n) - 1
        return cls(n=n, adj=tuple(full & ~(1 << v) for v in range(n)), live=full)

    def vertices(self) -> List[int]:
        return list(iter_bits(self.live))

    def vertex_count(self) -> int:
        return self.live.bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self.n and bool((self.adj[u] >> v) & 1)

    def neighbors(self, v: int) -> List[int]:
        return list(iter_bits(self.adj[v]))

    def edges(self) -> List[Tuple[int, int]]:
        return [(u, v) for u in iter_bits(self.live) for v in iter_bits(self.adj[u]) if u < v]

    def edge_count(self) -> int:
        return sum(self.adj[v].bit_count() for v in iter_bits(self.live)) // 2

    def is_clique(self, mask: int) -> bool:
        for v in iter_bits(mask):
            if (mask & ~(1 << v)) & ~self.adj[v]:
                return False
        return True

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(self.vertices())
        graph.add_edges_from(self.edges())
        return graph


class IdcGraph(UndirectedGraph):
    """K: aresta (i, j) sse os arcos i → j e j → i estão em G"""


@dataclass(frozen=True)
class SccDecomposition:
    """Componentes fortemente conexas ordenadas pelo menor vértice"""

    components: Tuple[FrozenSet[int], ...]
    component_of: Dict[int, int]

    def __len__(self) -> int:
        return len(self.components)


def build_side_info_graph(inst: Instance) -> SideInfoGraph:
    """
    Constrói o grafo de side information G

    Args:
        inst: Instância single-unicast (k=n, W_i={p_i})

    Returns:
        SideInfoGraph com arco (i, j) sse p_j ∈ H_i

    Raises:
        NotSingleUnicast: Se a instância não estiver reduzida
    """
    if not inst.is_single_unicast():
        raise NotSingleUnicast("G exige instância single-unicast (aplique a redução antes)")
    arcs = [(i, j) for i, has in enumerate(inst.has) for j in has if j != i and j < inst.n]
    return SideInfoGraph.from_arcs(inst.n, arcs)


def build_idc_graph(g: DiGraph) -> IdcGraph:
    """K a partir de G: mantém só os pares com arcos nos dois sentidos"""
    incoming = g.in_masks()
    adj = tuple(
        (g.out[v] & incoming[v]) if (g.live >> v) & 1 else 0
        for v in range(g.n)
    )
    return IdcGraph(n=g.n, adj=adj, live=g.live)


def underlying_graph(g: DiGraph) -> UndirectedGraph:
    """Grafo não-direcionado subjacente: aresta se houver arco em algum sentido"""
    incoming = g.in_masks()
    adj = tuple(
        (g.out[v] | incoming[v]) if (g.live >> v) & 1 else 0
        for v in range(g.n)
    )
    return UndirectedGraph(n=g.n, adj=adj, live=g.live)


def complement(k: UndirectedGraph) -> UndirectedGraph:
    """Complemento sobre os vértices vivos (sem laços); preserva o tipo"""
    adj = tuple(
        (k.live & ~k.adj[v] & ~(1 << v)) if (k.live >> v) & 1 else 0
        for v in range(k.n)
    )
    return type(k)(n=k.n, adj=adj, live=k.live)


def build_info_flow_graph(inst: Instance) -> InfoFlowGraph:
    """
    Constrói o grafo de fluxo de informação I sobre os clientes

    Args:
        inst: Qualquer instância válida

    Returns:
        InfoFlowGraph com arco i → j sse H_i ∩ W_j ≠ ∅
    """
    arcs = [
        (i, j)
        for i, has in enumerate(inst.has)
        for j, want in enumerate(inst.want)
        if i != j and has & want
    ]
    return InfoFlowGraph.from_arcs(inst.n, arcs)


def scc_decompose(g: DiGraph) -> SccDecomposition:
    """
    Decompõe o digrafo em componentes fortemente conexas (Tarjan iterativo)

    Args:
        g: Digrafo (só vértices vivos são considerados)

    Returns:
        SccDecomposition com componentes ordenadas pelo menor vértice
    """
    index: Dict[int, int] = {}
    lowlink: Dict[int, int] = {}
    on_stack = set()
    stack: List[int] = []
    found: List[FrozenSet[int]] = []
    counter = 0

    for root in iter_bits(g.live):
        if root in index:
            continue
        work = [(root, iter(iter_bits(g.out[root] & g.live)))]
        index[root] = lowlink[root] = counter
        counter += 1
        stack.append(root)
        on_stack.add(root)

        while work:
            v, successors = work[-1]
            advanced = False
            for w in successors:
                if w not in index:
                    index[w] = lowlink[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack.add(w)
                    work.append((w, iter(iter_bits(g.out[w] & g.live))))
                    advanced = True
                    break
                if w in on_stack:
                    lowlink[v] = min(lowlink[v], index[w])
            if advanced:
                continue

            work.pop()
            if work:
                parent = work[-1][0]
                lowlink[parent] = min(lowlink[parent], lowlink[v])
            if lowlink[v] == index[v]:
                component = set()
                while True:
                    w = stack.pop()
                    on_stack.discard(w)
                    component.add(w)
                    if w == v:
                        break
                found.append(frozenset(component))

    components = tuple(sorted(found, key=min))
    component_of = {v: c for c, comp in enumerate(components) for v in comp}
    return SccDecomposition(components=components, component_of=component_of)


def is_chordless_cycle(g: DiGraph, component: FrozenSet[int]) -> bool:
    """True se a componente é um ciclo dirigido sem cordas (graus 1 dentro dela)"""
    if len(component) < 2:
        return False
    mask = to_mask(component)
    incoming = g.in_masks()
    return all(
        (g.out[v] & mask).bit_count() == 1 and (incoming[v] & mask).bit_count() == 1
        for v in component
    )


def apply_step4b(
    g: SideInfoGraph,
    satisfied: Iterable[int],
    cache_updates: Sequence[Tuple[int, int]],
) -> SideInfoGraph:
    """
    Atualização do Step 4b: remove os satisfeitos e adiciona arcos de cache

    Args:
        g: Grafo G atual
        satisfied: Vértices (clientes) satisfeitos nesta transmissão
        cache_updates: Pares (cliente m, símbolo ganho i) viram arcos m → i

    Returns:
        Novo SideInfoGraph (o original não é alterado)

    Raises:
        UnknownVertex: Vértice ausente ou já removido
    """
    satisfied = list(satisfied)
    for v in satisfied:
        if not g.has_vertex(v):
            raise UnknownVertex(v)
    live = g.live & ~to_mask(satisfied)

    out = [g.out[v] & live if (live >> v) & 1 else 0 for v in range(g.n)]
    for m, i in cache_updates:
        for v in (m, i):
            if not (0 <= v < g.n and (live >> v) & 1):
                raise UnknownVertex(v)
        if m != i:
            out[m] |= 1 << i

    return SideInfoGraph(n=g.n, out=tuple(out), live=live)


# Grafo F: triângulo com uma aresta pendente ("paw")
FORBIDDEN_F_EDGES = ((0, 1), (0, 2), (1, 2), (2, 3))


def forbidden_f_graph() -> nx.Graph:
    return nx.Graph(FORBIDDEN_F_EDGES)


def contains_forbidden_f(k: UndirectedGraph) -> bool:
    """True se K contém uma cópia (não necessariamente induzida) de F"""
    if k.vertex_count() < 4:
        return False
    matcher = GraphMatcher(k.to_networkx(), forbidden_f_graph())
    return matcher.subgraph_is_monomorphic()


def max_matching_size(k: UndirectedGraph) -> int:
    """Tamanho do emparelhamento máximo de K"""
    return len(nx.max_weight_matching(k.to_networkx(), maxcardinality=True))
