"""Varreduras completas sobre centenas de instâncias (marcadas como slow)."""

import numpy as np
import pytest

from src.core.codec import verify_code_valid
from src.core.generators import gen_near_extreme, gen_random, single_uniprior_from_permutation
from src.core.graphs import build_idc_graph, build_side_info_graph
from src.core.minrank import exact_clique_partition, independence_lower_bound, minrk2
from src.layers.business_layer import BusinessLayer
from src.layers.experiment_layer import ExperimentLayer, ExperimentSpec

BASELINES = ("ldg", "color-saving", "greedy")

pytestmark = pytest.mark.slow


def _lengths(inst):
    business = BusinessLayer()
    lengths = {}
    for name in BASELINES:
        for algorithm in (name, "ucic-" + name):
            result = business.execute(inst, algorithm)
            for size in (1, 16):
                assert verify_code_valid(inst, result.code, draws=3, payload_size_bytes=size).valid
            lengths[algorithm] = result.ell
    return lengths


def test_bound_sandwich_on_small_instances():
    checked = 0
    seed = 0
    while checked < 200:
        n = 3 + seed % 6
        inst = gen_random(n, (0.1, 0.2, 0.3)[seed % 3], seed)
        seed += 1
        g = build_side_info_graph(inst)
        if g.arc_count() > 24:
            continue
        checked += 1

        omega = len(independence_lower_bound(g))
        rank = minrk2(g)
        phi = exact_clique_partition(build_idc_graph(g))
        lengths = _lengths(inst)
        assert omega <= rank <= phi
        for name in BASELINES:
            assert rank <= lengths["ucic-" + name] <= lengths[name] <= n
            assert phi <= lengths[name]


def test_dominance_on_random_instances():
    business = BusinessLayer()
    for seed in range(1000):
        n = 5 + seed % 26
        inst = gen_random(n, (0.05, 0.1, 0.3)[seed % 3], seed)
        for name in BASELINES:
            assert business.execute(inst, "ucic-" + name).ell <= business.execute(inst, name).ell


@pytest.mark.parametrize("n", range(4, 13))
def test_single_uniprior_reaches_cycle_bound(n):
    rng = np.random.Generator(np.random.PCG64(n))
    business = BusinessLayer()
    done = 0
    while done < 100:
        perm = rng.permutation(n)
        if np.any(perm == np.arange(n)):
            continue
        done += 1
        inst, xi = single_uniprior_from_permutation(perm)
        for name in BASELINES:
            code = business.execute(inst, "ucic-" + name).code
            assert code.ell == n - xi
            assert verify_code_valid(inst, code, draws=3, payload_size_bytes=16).valid
        if n <= 8:
            assert minrk2(build_side_info_graph(inst)) == n - xi


@pytest.mark.parametrize("n", range(4, 11))
def test_near_extreme_families(n):
    expected = {"complete": 1, "star": n - 1, "edgeless": n}
    if n >= 6:
        expected["matching2-noF"] = n - 2
    for family, ell in expected.items():
        inst = gen_near_extreme(family, n, seed=n)
        lengths = _lengths(inst)
        assert all(value == ell for name, value in lengths.items() if name.startswith("ucic-"))
        g = build_side_info_graph(inst)
        if n <= 8 and g.arc_count() <= 24:
            assert minrk2(g) == ell


def test_ucic_improves_gain_at_low_density():
    spec = ExperimentSpec(
        n_values=[20, 30, 40, 50, 60],
        p_has_values=[0.05, 0.1],
        trials=100,
        algorithms=["ldg", "ucic-ldg", "color-saving", "ucic-color-saving"],
    )
    layer = ExperimentLayer(progress=False)
    report = layer.execute(spec)
    assert len(report["violations"]) == 0

    df = report["dataframe"]
    for baseline in ("ldg", "color-saving"):
        for n in spec.n_values:
            test = layer.sign_test(df, baseline, n=n, p_has=0.05)
            assert test.negative == 0
            assert test.p_value < 0.01
