import math

import pytest

from src.core.generators import (
    FIXTURE_NAMES,
    GenSpec,
    fixture,
    gen_near_extreme,
    gen_random,
    gen_single_uniprior,
    generate,
    single_uniprior_cycles,
    single_uniprior_from_permutation,
)
from src.errors import BadFamilyParams, NotSingleUniprior, UnknownFixture
from src.models.instance import validate_instance


def test_gen_random_is_deterministic():
    a = gen_random(20, 0.1, seed=7)
    b = gen_random(20, 0.1, seed=7)
    assert a == b
    assert a.is_single_unicast()
    assert validate_instance(a) == []
    assert gen_random(20, 0.1, seed=8) != a


def test_gen_random_extremes():
    assert all(not h for h in gen_random(6, 0.0, seed=1).has)
    full = gen_random(6, 1.0, seed=1)
    assert all(h == frozenset(range(6)) - {i} for i, h in enumerate(full.has))


@pytest.mark.parametrize("n, p_has", [(0, 0.1), (5, -0.1), (5, 1.5)])
def test_gen_random_rejects(n, p_has):
    with pytest.raises(BadFamilyParams):
        gen_random(n, p_has, seed=0)


def test_single_uniprior_from_permutation():
    inst, xi = single_uniprior_from_permutation([1, 0, 3, 4, 2])
    assert xi == 2
    assert inst.has[2] == frozenset({3})
    assert single_uniprior_cycles(inst) == xi


@pytest.mark.parametrize("perm", [[0, 1], [1, 1], [0]])
def test_single_uniprior_rejects(perm):
    with pytest.raises(BadFamilyParams):
        single_uniprior_from_permutation(perm)


@pytest.mark.parametrize("seed", range(10))
def test_gen_single_uniprior_is_derangement(seed):
    inst, xi = gen_single_uniprior(9, seed)
    assert all(len(h) == 1 and i not in h for i, h in enumerate(inst.has))
    assert 1 <= xi <= 4
    assert single_uniprior_cycles(inst) == xi


def test_single_uniprior_cycles_rejects(motivating):
    with pytest.raises(NotSingleUniprior):
        single_uniprior_cycles(motivating)


def test_near_extreme_families():
    complete = gen_near_extreme("complete", 5, seed=0)
    assert all(len(h) == 4 for h in complete.has)
    assert all(not h for h in gen_near_extreme("edgeless", 5, seed=0).has)

    star = gen_near_extreme("star", 6, seed=2)
    centers = [i for i, h in enumerate(star.has) if len(h) == 5]
    assert len(centers) == 1
    assert all(star.has[i] == frozenset(centers) for i in range(6) if i != centers[0])

    matching = gen_near_extreme("matching2-noF", 7, seed=4)
    assert sum(len(h) for h in matching.has) == 4


@pytest.mark.parametrize("family, n", [("matching2-noF", 5), ("star", 1), ("wheel", 6), ("complete", 0)])
def test_near_extreme_rejects(family, n):
    with pytest.raises(BadFamilyParams):
        gen_near_extreme(family, n, seed=0)


def test_fixtures():
    assert [fixture(name).n for name in FIXTURE_NAMES] == [5, 2, 4]
    with pytest.raises(UnknownFixture):
        fixture("nope")


def test_generate_dispatch(motivating):
    assert generate(GenSpec(family="fixture", fixture_name="motivating")) == motivating
    assert generate(GenSpec(family="random", n=8, p_has=0.2, seed=3)) == gen_random(8, 0.2, 3)
    assert generate(GenSpec(family="star", n=4, seed=1)).n == 4
    with pytest.raises(BadFamilyParams):
        generate(GenSpec(family="fixture"))


def test_negative_seed_folds_into_uint64():
    assert gen_random(5, 0.3, seed=-1) == gen_random(5, 0.3, seed=2**64 - 1)
    inst, xi = gen_single_uniprior(6, seed=-3)
    assert single_uniprior_cycles(inst) == xi
    assert gen_near_extreme("star", 5, seed=-2) == gen_near_extreme("star", 5, seed=2**64 - 2)


def test_gen_random_edge_density():
    n, p_has = 40, 0.05
    pairs = n * (n - 1)
    sigma = math.sqrt(p_has * (1 - p_has) / pairs)
    densities = [
        sum(len(h) for h in gen_random(n, p_has, seed).has) / pairs
        for seed in range(7, 107)
    ]
    assert abs(sum(densities) / len(densities) - p_has) <= 3 * sigma
    inside = sum(abs(d - p_has) <= 3 * sigma for d in densities)
    assert inside >= 95


def test_gen_spec_from_options_rejects_bad_values():
    assert GenSpec.from_options(family="star", n=4, seed=1).family == "star"
    with pytest.raises(BadFamilyParams, match="p_has"):
        GenSpec.from_options(family="random", n=4, p_has=1.5)
