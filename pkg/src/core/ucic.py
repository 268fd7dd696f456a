"""
UCIC - Updated Clique Index Coding
Responsável pelo laço principal (partição, escolha do par clique/piggyback,
atualização do grafo) e pelo GreedySearch, gerando o código e o trace.
"""

from dataclasses import dataclass
from typing import FrozenSet, List, Optional, Sequence, Tuple

from src.config import get_settings
from src.core.graphs import (
    SideInfoGraph,
    apply_step4b,
    build_idc_graph,
    build_side_info_graph,
    iter_bits,
    to_mask,
)
from src.core.partition import CliquePartition, Partitioner
from src.errors import InvalidInstance
from src.models.code import CodedSymbol, IndexCode, IterationRecord, SolveTrace
from src.models.instance import Instance, validate_instance


@dataclass(frozen=True)
class PiggybackCandidate:
    """Melhor símbolo piggyback para uma clique"""

    piggyback: int
    gain: int
    gaining_clients: Tuple[int, ...]
    k_edges_created: int


def greedy_search(g: SideInfoGraph, clique: FrozenSet[int]) -> Optional[PiggybackCandidate]:
    """
    GreedySearch: escolhe o piggyback que mais atualiza caches

    Um candidato p_i (fora da clique, ainda vivo) precisa estar no has set
    de todos os membros da clique. Ganha o cache p_i todo cliente m fora da
    clique, m != i, que tem todos os símbolos da clique e não tem p_i.

    Args:
        g: Grafo G atual
        clique: Y_b, clique de K formada por clientes não satisfeitos

    Returns:
        Melhor candidato (o ganho pode ser 0) ou None se não há candidato
    """
    clique_mask = to_mask(clique)
    outside = g.live & ~clique_mask

    candidates = outside
    for j in clique:
        candidates &= g.out[j]
    if not candidates:
        return None

    holders = [m for m in iter_bits(outside) if g.out[m] & clique_mask == clique_mask]

    best: Optional[PiggybackCandidate] = None
    for i in iter_bits(candidates):
        gaining = tuple(m for m in holders if m != i and not (g.out[m] >> i) & 1)
        # m ganha p_i; se i → m já existe, surge a aresta (i, m) em K
        k_edges = sum(1 for m in gaining if (g.out[i] >> m) & 1)
        if best is None or (len(gaining), k_edges) > (best.gain, best.k_edges_created):
            best = PiggybackCandidate(
                piggyback=i,
                gain=len(gaining),
                gaining_clients=gaining,
                k_edges_created=k_edges,
            )
    return best


def select_best_pair(
    beta: Sequence[FrozenSet[int]],
    results: Sequence[Optional[PiggybackCandidate]],
) -> Optional[Tuple[FrozenSet[int], PiggybackCandidate]]:
    """
    Escolhe o par (Y_b, pbs) com maior ganho

    Ordem: maior ganho, mais arestas novas em K, menor id de piggyback,
    menor clique (ids ordenados). Só aceita ganho >= 1.

    Args:
        beta: Cliques de tamanho mínimo
        results: Resultado do greedy_search para cada clique de beta

    Returns:
        Par vencedor ou None (o chamador cai no Step 5)
    """
    pairs = [
        (clique, found)
        for clique, found in zip(beta, results)
        if found is not None and found.gain >= 1
    ]
    if not pairs:
        return None
    return min(
        pairs,
        key=lambda pair: (-pair[1].gain, -pair[1].k_edges_created, pair[1].piggyback, sorted(pair[0])),
    )


def fallback_emit(partition: CliquePartition) -> List[CodedSymbol]:
    """Step 5: uma transmissão por clique (XOR dos símbolos da clique)"""
    return [CodedSymbol(support=clique) for clique in partition.cliques]


def clique_partition_code(inst: Instance, partitioner: Partitioner) -> Tuple[IndexCode, CliquePartition]:
    """Baseline: particiona K inicial e transmite cada clique"""
    k = build_idc_graph(build_side_info_graph(inst))
    partition = partitioner(k)
    return IndexCode(transmissions=tuple(fallback_emit(partition))), partition


def ucic_solve(
    inst: Instance,
    partitioner: Partitioner,
    continue_after_fallback: Optional[bool] = None,
    logger=None,
    partitioner_name: str = "",
) -> Tuple[IndexCode, SolveTrace]:
    """
    Executa o UCIC sobre uma instância single-unicast

    Args:
        inst: Instância válida e reduzida (k=n, W_i={p_i})
        partitioner: Heurística de partição em cliques do Step 1
        continue_after_fallback: Se True, transmite a clique sem piggyback e
            segue no laço em vez de encerrar no Step 5
        logger: SolveDecisionLogger opcional
        partitioner_name: Nome registrado no trace

    Returns:
        Tupla (código, trace)

    Raises:
        InvalidInstance: Instância viola as invariantes
        NotSingleUnicast: Instância não reduzida
    """
    violations = validate_instance(inst)
    if violations:
        raise InvalidInstance(violations)
    if continue_after_fallback is None:
        continue_after_fallback = get_settings().continue_after_fallback
    name = partitioner_name or getattr(partitioner, "__name__", "")

    g = build_side_info_graph(inst)
    initial = partitioner(build_idc_graph(g))

    transmissions: List[CodedSymbol] = []
    records: List[IterationRecord] = []
    fallback_used = False
    iteration = 0

    while g.live:
        iteration += 1
        partition = partitioner(build_idc_graph(g))
        beta = partition.minimum_cliques()
        results = [greedy_search(g, clique) for clique in beta]
        choice = select_best_pair(beta, results)

        if choice is not None:
            clique, found = choice
            gains = tuple((m, found.piggyback) for m in found.gaining_clients)
            transmissions.append(CodedSymbol(support=clique | {found.piggyback}))
            record = IterationRecord(
                iteration=iteration,
                chosen_clique=clique,
                piggyback=found.piggyback,
                gain=found.gain,
                satisfied=clique,
                cache_gains=gains,
                partition_size_r=partition.r,
            )
            records.append(record)
            if logger is not None:
                logger.log_iteration(name, record, beta_size=len(beta))
            g = apply_step4b(g, clique, gains)
            continue

        fallback_used = True
        if continue_after_fallback:
            clique = beta[0]
            transmissions.append(CodedSymbol(support=clique))
            record = IterationRecord(
                iteration=iteration,
                chosen_clique=clique,
                satisfied=clique,
                partition_size_r=partition.r,
                fallback=True,
            )
            records.append(record)
            if logger is not None:
                logger.log_fallback(name, record)
            g = apply_step4b(g, clique, ())
            continue

        emitted = fallback_emit(partition)
        transmissions.extend(emitted)
        record = IterationRecord(
            iteration=iteration,
            satisfied=frozenset(iter_bits(g.live)),
            partition_size_r=partition.r,
            fallback=True,
            transmissions=len(emitted),
        )
        records.append(record)
        if logger is not None:
            logger.log_fallback(name, record)
        break

    attempted = len(transmissions)
    guard = attempted > initial.r
    if guard:
        # nunca pior que a partição inicial
        transmissions = fallback_emit(initial)
        records = [
            IterationRecord(
                iteration=1,
                satisfied=frozenset(range(inst.n)),
                partition_size_r=initial.r,
                fallback=True,
                transmissions=initial.r,
            )
        ]
        fallback_used = True
        if logger is not None:
            logger.log_dominance_guard(name, initial.r, attempted)

    trace = SolveTrace(
        iterations=records,
        fallback_used=fallback_used,
        dominance_guard_used=guard,
        initial_partition_size=initial.r,
        partitioner=name,
    )
    return IndexCode(transmissions=tuple(transmissions)), trace
