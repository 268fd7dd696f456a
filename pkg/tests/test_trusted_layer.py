from itertools import combinations, product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.core.codec import verify_code_valid
from src.errors import InvalidInstance, MulticastInput
from src.layers.business_layer import BusinessLayer
from src.layers.trusted_layer import TrustedLayer, reduce_to_single_unicast
from src.models.code import IndexCode
from src.models.instance import Instance


def test_single_unicast_is_identity(motivating):
    result = reduce_to_single_unicast(motivating)
    assert result.is_identity
    assert result.instance == motivating


def test_multi_want_client_is_split(multi_want):
    result = TrustedLayer().execute(multi_want)
    assert result.symbol_origin == (0, 1, 2)
    assert result.client_origin == (0, 0, 1)
    assert result.instance.has == (frozenset({2}), frozenset({2}), frozenset({0}))
    assert result.instance.is_single_unicast()
    assert result.original_client(1) == 0


def test_unwanted_symbols_leave_the_universe():
    inst = Instance(
        n=2,
        k=3,
        has=(frozenset({2}), frozenset({0})),
        want=(frozenset({0}), frozenset({1})),
    )
    result = reduce_to_single_unicast(inst)
    assert result.symbol_origin == (0, 1)
    assert result.instance.has == (frozenset(), frozenset({0}))
    assert not result.is_identity


def test_lift_code_maps_back():
    inst = Instance(
        n=2,
        k=4,
        has=(frozenset({3}), frozenset({1})),
        want=(frozenset({1}), frozenset({3})),
    )
    result = reduce_to_single_unicast(inst)
    assert result.symbol_origin == (1, 3)
    lifted = result.lift_code(IndexCode.from_supports([{0, 1}]))
    assert lifted.supports() == [frozenset({1, 3})]


def test_multicast_is_rejected():
    inst = Instance(
        n=2,
        k=2,
        has=(frozenset({1}), frozenset()),
        want=(frozenset({0}), frozenset({0})),
    )
    with pytest.raises(MulticastInput) as err:
        reduce_to_single_unicast(inst)
    assert err.value.symbol == 0
    assert err.value.clients == [0, 1]


def test_invalid_instance_lists_violations():
    inst = Instance(
        n=1,
        k=1,
        has=(frozenset({0}),),
        want=(frozenset({0}),),
    )
    with pytest.raises(InvalidInstance) as err:
        TrustedLayer().reduce_to_single_unicast(inst)
    assert err.value.violations == ["cliente c1: p1 em W e em H ao mesmo tempo"]


def test_dropped_symbol_is_not_identity():
    inst = Instance(n=1, k=2, has=(frozenset({1}),), want=(frozenset({0}),))
    result = reduce_to_single_unicast(inst)
    assert result.symbol_origin == (0,)
    assert (result.original_n, result.original_k) == (1, 2)
    assert not result.is_identity


@st.composite
def unicast_instances(draw, max_n=6, max_k=6):
    n = draw(st.integers(min_value=1, max_value=max_n))
    k = draw(st.integers(min_value=1, max_value=max_k))
    owners = draw(st.lists(st.integers(min_value=-1, max_value=n - 1), min_size=k, max_size=k))
    want = [frozenset(s for s in range(k) if owners[s] == i) for i in range(n)]
    has = [
        frozenset(draw(st.sets(st.sampled_from(sorted(set(range(k)) - want[i])))) if len(want[i]) < k else ())
        for i in range(n)
    ]
    return Instance(n=n, k=k, has=tuple(has), want=tuple(want))


def _valid(inst, code):
    return verify_code_valid(inst, code, draws=2, fixpoint=False).valid


def test_split_client_codes_stay_valid_after_lifting():
    inst = Instance(
        n=2,
        k=3,
        has=(frozenset({1}), frozenset({0, 2})),
        want=(frozenset({0, 2}), frozenset({1})),
    )
    result = reduce_to_single_unicast(inst)
    reduced = result.instance
    assert result.client_origin == (0, 1, 0)
    assert reduced.has == (frozenset({1}), frozenset({0, 2}), frozenset({1}))

    supports = [frozenset(s) for size in (1, 2, 3) for s in combinations(range(3), size)]
    checked = 0
    for length in (1, 2, 3):
        for sequence in product(supports, repeat=length):
            code = IndexCode.from_supports(sequence)
            if _valid(reduced, code):
                checked += 1
                assert _valid(inst, result.lift_code(code))
    assert checked > 0


@settings(max_examples=80, deadline=None)
@given(unicast_instances())
def test_reduction_preserves_solvability(inst):
    result = reduce_to_single_unicast(inst)
    business = BusinessLayer()
    for algorithm in ("ldg", "greedy", "ucic-ldg", "ucic-color-saving"):
        code = business.solve(result.instance, algorithm).code
        assert _valid(result.instance, code)
        assert _valid(inst, result.lift_code(code))
