"""
Core Package - Algoritmos de Index Coding
"""

from .graphs import (
    IdcGraph,
    InfoFlowGraph,
    SideInfoGraph,
    apply_step4b,
    build_idc_graph,
    build_info_flow_graph,
    build_side_info_graph,
    complement,
    scc_decompose,
)
from .partition import (
    CliquePartition,
    color_saving_partition,
    get_partitioner,
    greedy_partition,
    ldg_partition,
    verify_partition,
)
from .ucic import fallback_emit, greedy_search, select_best_pair, ucic_solve
from .minrank import clique_number, exact_clique_partition, gf2_rank, minrk2
from .codec import PayloadStore, encode, simulate_decode, verify_code_valid
from .generators import fixture, gen_near_extreme, gen_random, gen_single_uniprior

__all__ = [
    'IdcGraph',
    'InfoFlowGraph',
    'SideInfoGraph',
    'apply_step4b',
    'build_idc_graph',
    'build_info_flow_graph',
    'build_side_info_graph',
    'complement',
    'scc_decompose',
    'CliquePartition',
    'color_saving_partition',
    'get_partitioner',
    'greedy_partition',
    'ldg_partition',
    'verify_partition',
    'fallback_emit',
    'greedy_search',
    'select_best_pair',
    'ucic_solve',
    'clique_number',
    'exact_clique_partition',
    'gf2_rank',
    'minrk2',
    'PayloadStore',
    'encode',
    'simulate_decode',
    'verify_code_valid',
    'fixture',
    'gen_near_extreme',
    'gen_random',
    'gen_single_uniprior'
]
