"""
Aplicação CLI - Index Coding com UCIC
Comandos: gen, solve, verify, oracle, check, experiment, fixtures
"""

import functools
from pathlib import Path

import click

from src.core.generators import (
    FIXTURE_NAMES,
    NEAR_EXTREME_FAMILIES,
    GenSpec,
    fixture,
    generate,
    single_uniprior_cycles,
)
from src.core.graphs import build_idc_graph, build_side_info_graph
from src.core.minrank import exact_clique_partition_witness, independence_lower_bound, minrk2_witness
from src.errors import IndexCodingError, InvalidCodeProduced
from src.layers.business_layer import ALGORITHMS, UCIC_PREFIX, BusinessLayer
from src.layers.experiment_layer import ExperimentLayer, ExperimentSpec
from src.layers.raw_layer import RawLayer
from src.layers.trusted_layer import TrustedLayer
from src.models.instance import client_name, format_gain, format_support, symbol_name
from src.utils.decision_logger import get_logger
from src.utils.exporters import write_dot, write_trace

EXIT_USAGE = 1
EXIT_VALIDATION = 2
EXIT_INVARIANT = 3


class ValidationFailure(click.ClickException):
    exit_code = EXIT_VALIDATION


class InvariantViolation(click.ClickException):
    exit_code = EXIT_INVARIANT


class UcicGroup(click.Group):
    """Grupo que devolve 1 para erros de uso (o padrão do click é 2)"""

    def make_context(self, info_name, args, parent=None, **extra):
        try:
            return super().make_context(info_name, args, parent=parent, **extra)
        except click.UsageError as e:
            e.exit_code = EXIT_USAGE
            raise

    def invoke(self, ctx):
        try:
            return super().invoke(ctx)
        except click.UsageError as e:
            e.exit_code = EXIT_USAGE
            raise


def handle_errors(func):
    """Converte erros da biblioteca nos códigos de saída da CLI"""

    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except InvalidCodeProduced as e:
            raise InvariantViolation(str(e)) from e
        except IndexCodingError as e:
            raise ValidationFailure(f"{type(e).__name__}: {e}") from e

    return wrapper


def _load_reduced(instance_path: str):
    inst = RawLayer().load_instance(instance_path)
    return inst, TrustedLayer().reduce_to_single_unicast(inst)


def _original_names(reduction, vertices) -> str:
    return format_support(reduction.symbol_origin[v] for v in vertices)


def _emit(text: str, output: str) -> None:
    if output:
        Path(output).parent.mkdir(parents=True, exist_ok=True)
        Path(output).write_text(text, encoding="utf-8")
        click.echo(f"💾 Salvo em: {output}")
    else:
        click.echo(text, nl=False)


@click.group(cls=UcicGroup)
def main():
    """Index coding por partição em cliques e UCIC."""


@main.command()
@click.option("--family", type=click.Choice(["random", "single-uniprior", *NEAR_EXTREME_FAMILIES]), default="random")
@click.option("--fixture", "fixture_name", type=click.Choice(FIXTURE_NAMES), default=None,
              help="Usa uma fixture em vez de sortear")
@click.option("--n", type=int, default=10, show_default=True)
@click.option("--p-has", type=float, default=0.05, show_default=True)
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("-o", "--output", type=click.Path(dir_okay=False), default=None)
@handle_errors
def gen(family, fixture_name, n, p_has, seed, output):
    """Gera uma instância (JSON)."""
    if fixture_name:
        spec = GenSpec.from_options(family="fixture", fixture_name=fixture_name)
    else:
        spec = GenSpec.from_options(family=family, n=n, p_has=p_has, seed=seed)
    inst = generate(spec)
    if spec.family == "single-uniprior":
        click.echo(f"xi={single_uniprior_cycles(inst)}", err=True)
    _emit(RawLayer().serialize_instance(inst), output)


@main.command()
@click.argument("instance", type=click.Path(exists=True, dir_okay=False))
@click.option("-a", "--algorithm", type=click.Choice(ALGORITHMS), default="ucic-ldg", show_default=True)
@click.option("-o", "--output", type=click.Path(dir_okay=False), default=None, help="Arquivo de código")
@click.option("--trace", "trace_path", type=click.Path(dir_okay=False), default=None)
@click.option("--dot", "dot_path", type=click.Path(dir_okay=False), default=None)
@click.option("--continue-after-fallback/--break-on-fallback", default=None)
@click.option("--log/--no-log", "with_log", default=False, help="Salva o log de decisões")
@click.option("--log-dir", type=click.Path(file_okay=False), default=None)
@handle_errors
def solve(instance, algorithm, output, trace_path, dot_path, continue_after_fallback, with_log, log_dir):
    """Resolve uma instância e imprime ℓ e o coding gain."""
    inst = RawLayer().load_instance(instance)
    logger = get_logger(log_dir) if with_log else None
    business = BusinessLayer(logger=logger, continue_after_fallback=continue_after_fallback)
    result = business.execute(inst, algorithm)

    if output:
        RawLayer().save_code(result.code, output)
    reduction = result.reduction
    if dot_path:
        write_dot(build_side_info_graph(reduction.instance), dot_path, symbol_origin=reduction.symbol_origin)
    if trace_path:
        if result.trace is None:
            raise click.UsageError("--trace só se aplica aos algoritmos ucic-*")
        write_trace(result.trace, trace_path, reduction.symbol_origin, reduction.client_origin)

    click.echo(f"code={result.code}")
    click.echo(f"ℓ={result.ell}")
    gain = format_gain(result.coding_gain) if result.coding_gain is not None else "-"
    click.echo(f"coding_gain={gain}")
    click.echo(f"fallback_used={'true' if result.fallback_used else 'false'}")

    if logger is not None:
        logger.save_session()
        logger.save_summary_report()
        stats = logger.get_stats()
        click.echo(f"📝 {stats['total_decisions']} decisões em {stats['log_file']}", err=True)


@main.command()
@click.argument("instance", type=click.Path(exists=True, dir_okay=False))
@click.argument("code", type=click.Path(exists=True, dir_okay=False))
@click.option("--fixpoint", is_flag=True, default=False, help="Decodificação com revarredura (diagnóstico)")
@click.option("--draws", type=int, default=None)
@click.option("--payload-size", type=int, default=None)
@handle_errors
def verify(instance, code, fixpoint, draws, payload_size):
    """Certifica um código contra uma instância."""
    raw = RawLayer()
    inst = raw.load_instance(instance)
    violations = TrustedLayer().validate(inst)
    if violations:
        raise ValidationFailure("; ".join(violations))
    index_code = raw.load_code(code)
    report = BusinessLayer().verify(
        inst, index_code, draws=draws, fixpoint=fixpoint, payload_size_bytes=payload_size
    )
    if report.valid:
        click.echo(f"✅ válido: ℓ={index_code.ell}")
        return
    for client, missing in report.unsatisfied.items():
        click.echo(f"{client_name(client)} sem {format_support(missing)}")
    for client, symbol in report.mismatches:
        click.echo(f"{client_name(client)} recuperou {symbol_name(symbol)} errado")
    raise ValidationFailure(f"código inválido: {len(report.unsatisfied)} clientes insatisfeitos")


@main.group(cls=UcicGroup)
def oracle():
    """Oráculos exatos (instâncias pequenas)."""


@oracle.command("minrk2")
@click.argument("instance", type=click.Path(exists=True, dir_okay=False))
@click.option("--max-free", type=int, default=None)
@handle_errors
def oracle_minrk2(instance, max_free):
    """minrk2(G) e a matriz testemunha."""
    _, reduction = _load_reduced(instance)
    rank, fit = minrk2_witness(build_side_info_graph(reduction.instance), max_free)
    click.echo(str(rank))
    for row in fit.to_array():
        click.echo(" ".join(str(int(x)) for x in row))


@oracle.command("phi")
@click.argument("instance", type=click.Path(exists=True, dir_okay=False))
@click.option("--max-n", type=int, default=None)
@handle_errors
def oracle_phi(instance, max_n):
    """φ(K) exato e a partição testemunha."""
    _, reduction = _load_reduced(instance)
    k = build_idc_graph(build_side_info_graph(reduction.instance))
    size, partition = exact_clique_partition_witness(k, max_n)
    click.echo(str(size))
    for clique in partition.cliques:
        click.echo(_original_names(reduction, clique))


@oracle.command("omega")
@click.argument("instance", type=click.Path(exists=True, dir_okay=False))
@click.option("--max-n", type=int, default=None)
@handle_errors
def oracle_omega(instance, max_n):
    """Limite inferior ω(Ḡ) e o conjunto testemunha."""
    _, reduction = _load_reduced(instance)
    witness = independence_lower_bound(build_side_info_graph(reduction.instance), max_n)
    click.echo(str(len(witness)))
    if witness:
        click.echo(_original_names(reduction, witness))


@main.command()
@click.argument("instance", type=click.Path(exists=True, dir_okay=False))
@handle_errors
def check(instance):
    """Confere ω ≤ minrk2 ≤ ℓ(ucic-X) ≤ ℓ(X) ≤ n e minrk2 ≤ φ ≤ ℓ(X)."""
    inst, reduction = _load_reduced(instance)
    g = build_side_info_graph(reduction.instance)
    omega = len(independence_lower_bound(g))
    rank, _ = minrk2_witness(g)
    phi, _ = exact_clique_partition_witness(build_idc_graph(g))
    n = reduction.instance.n

    click.echo(f"omega={omega}")
    click.echo(f"minrk2={rank}")
    click.echo(f"phi={phi}")

    problems = []
    if not omega <= rank <= phi:
        problems.append(f"sanduíche violado: ω={omega} minrk2={rank} φ={phi}")

    business = BusinessLayer()
    ells = {}
    for algorithm in ALGORITHMS:
        result = business.execute(inst, algorithm)
        ells[algorithm] = result.ell
        click.echo(f"{algorithm} ℓ={result.ell}")

    for algorithm, ell in ells.items():
        if ell < rank:
            problems.append(f"{algorithm}: ℓ={ell} abaixo de minrk2={rank}")
        if algorithm.startswith(UCIC_PREFIX):
            base = algorithm[len(UCIC_PREFIX):]
            if ell > ells[base]:
                problems.append(f"{algorithm}: ℓ={ell} pior que {base} ℓ={ells[base]}")
        elif not phi <= ell <= n:
            problems.append(f"{algorithm}: ℓ={ell} fora de [φ={phi}, n={n}]")

    if problems:
        raise InvariantViolation("; ".join(problems))
    click.echo("✅ limites conferidos")


@main.command()
@click.option("--n", "n_values", type=int, multiple=True, help="Repetível (default 20..60)")
@click.option("--p-has", "p_has_values", type=float, multiple=True, help="Repetível (default 0.05, 0.1)")
@click.option("--trials", type=int, default=100, show_default=True)
@click.option("-a", "--algorithm", "algorithms", type=click.Choice(ALGORITHMS), multiple=True)
@click.option("--seed", "base_seed", type=int, default=0, show_default=True)
@click.option("--workers", type=int, default=None)
@click.option("-o", "--output", type=click.Path(dir_okay=False), default=None, help="CSV de saída")
@click.option("--excel", type=click.Path(dir_okay=False), default=None)
@handle_errors
def experiment(n_values, p_has_values, trials, algorithms, base_seed, workers, output, excel):
    """Varredura de coding gain (CSV)."""
    fields = {"trials": trials, "base_seed": base_seed}
    if n_values:
        fields["n_values"] = list(n_values)
    if p_has_values:
        fields["p_has_values"] = list(p_has_values)
    if algorithms:
        fields["algorithms"] = list(algorithms)
    try:
        spec = ExperimentSpec(**fields)
    except ValueError as e:
        raise click.UsageError(str(e)) from e

    layer = ExperimentLayer(workers=workers, progress=output is not None, verbose=False)
    report = layer.execute(spec, excel_path=excel)
    _emit(layer.to_csv(report["rows"]), output)

    if output:
        for test in report["sign_tests"]:
            click.echo(f"{test.ucic} vs {test.baseline}: +{test.positive} -{test.negative} p={test.p_value:.3g}")
    if len(report["violations"]):
        raise InvariantViolation(f"{len(report['violations'])} violações de dominância")


@main.group(cls=UcicGroup)
def fixtures():
    """Fixtures das instâncias de exemplo."""


@fixtures.command("list")
def fixtures_list():
    """Lista as fixtures com seus has sets."""
    for name in FIXTURE_NAMES:
        inst = fixture(name)
        has = "; ".join(
            f"{client_name(i)}:{{{format_support(h)}}}" for i, h in enumerate(inst.has)
        )
        click.echo(f"{name} n={inst.n} {has}")


if __name__ == '__main__':
    main()
