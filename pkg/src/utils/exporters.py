"""
EXPORTERS - Saídas de Depuração
DOT de G e K e o arquivo de trace (uma linha por iteração)
"""

from pathlib import Path
from typing import Optional, Sequence

from src.core.graphs import DiGraph, UndirectedGraph, build_idc_graph
from src.models.code import SolveTrace
from src.models.instance import symbol_name


def _label(v: int, symbol_origin: Optional[Sequence[int]]) -> str:
    return symbol_name(v if symbol_origin is None else symbol_origin[v])


def digraph_to_dot(g: DiGraph, name: str = "G", symbol_origin: Optional[Sequence[int]] = None) -> str:
    lines = [f"digraph {name} {{"]
    lines += [f'    "{_label(v, symbol_origin)}";' for v in g.vertices()]
    lines += [f'    "{_label(i, symbol_origin)}" -> "{_label(j, symbol_origin)}";' for i, j in g.arcs()]
    lines.append("}")
    return "\n".join(lines) + "\n"


def graph_to_dot(k: UndirectedGraph, name: str = "K", symbol_origin: Optional[Sequence[int]] = None) -> str:
    lines = [f"graph {name} {{"]
    lines += [f'    "{_label(v, symbol_origin)}";' for v in k.vertices()]
    lines += [f'    "{_label(u, symbol_origin)}" -- "{_label(v, symbol_origin)}";' for u, v in k.edges()]
    lines.append("}")
    return "\n".join(lines) + "\n"


def write_dot(g: DiGraph, output_path: str, symbol_origin: Optional[Sequence[int]] = None) -> str:
    """
    Salva G e o K derivado num único arquivo DOT

    Args:
        g: Grafo de side information (ids reduzidos)
        output_path: Caminho de saída
        symbol_origin: Mapa para os nomes originais p<i> (default: identidade)

    Returns:
        Caminho salvo
    """
    text = digraph_to_dot(g, symbol_origin=symbol_origin) + "\n"
    text += graph_to_dot(build_idc_graph(g), symbol_origin=symbol_origin)
    Path(output_path).parent.mkdir(parents=True, exist_ok=True)
    Path(output_path).write_text(text, encoding="utf-8")
    return output_path


def trace_to_text(
    trace: SolveTrace,
    symbol_origin: Optional[Sequence[int]] = None,
    client_origin: Optional[Sequence[int]] = None,
) -> str:
    lines = trace.to_lines(symbol_origin, client_origin)
    if trace.dominance_guard_used:
        lines.append(f"dominance_guard=true r={trace.initial_partition_size}")
    return "\n".join(lines) + "\n"


def write_trace(
    trace: SolveTrace,
    output_path: str,
    symbol_origin: Optional[Sequence[int]] = None,
    client_origin: Optional[Sequence[int]] = None,
) -> str:
    Path(output_path).parent.mkdir(parents=True, exist_ok=True)
    Path(output_path).write_text(trace_to_text(trace, symbol_origin, client_origin), encoding="utf-8")
    return output_path
