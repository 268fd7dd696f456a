from fractions import Fraction

import pytest

from src.errors import InvalidCodeProduced, UnknownAlgorithm
from src.layers.business_layer import ALGORITHMS, BusinessLayer, parse_algorithm, solve_instance
from src.models.code import IndexCode


def test_algorithm_names():
    assert ALGORITHMS == ("ldg", "color-saving", "greedy", "ucic-ldg", "ucic-color-saving", "ucic-greedy")
    assert parse_algorithm("ucic-greedy") == ("greedy", True)
    assert parse_algorithm("ldg") == ("ldg", False)
    with pytest.raises(UnknownAlgorithm):
        parse_algorithm("ucic-dsatur")


@pytest.mark.parametrize("algorithm, ell", [
    ("ucic-ldg", 3), ("ucic-color-saving", 3), ("ucic-greedy", 3),
    ("ldg", 5), ("color-saving", 5), ("greedy", 5),
])
def test_motivating_lengths(motivating, algorithm, ell):
    result = BusinessLayer().execute(motivating, algorithm)
    assert result.ell == ell
    assert result.coding_gain == Fraction(5, ell)
    assert result.report.valid


def test_summary_line(motivating):
    result = solve_instance(motivating, "ucic-ldg")
    assert result.summary_line() == "algorithm=ucic-ldg ell=3 coding_gain=5/3 (1.6667) fallback_used=sim"
    assert result.initial_partition_size == 5
    assert result.trace is not None


def test_baselines_have_no_trace(alice_bob):
    result = solve_instance(alice_bob, "color-saving")
    assert result.trace is None
    assert not result.fallback_used
    assert str(result.code) == "{p1⊕p2}"


def test_multi_want_instance_is_lifted(multi_want):
    result = BusinessLayer().execute(multi_want, "ucic-ldg")
    assert result.code.supports() == [frozenset({0, 2}), frozenset({1})]
    assert result.reduction.instance.n == 3
    assert result.coding_gain == Fraction(3, 2)


def test_verify_logs_verdict(motivating):
    calls = []

    class Recorder:
        def log_verification(self, code, report):
            calls.append((code, report.valid))

    layer = BusinessLayer(logger=Recorder())
    code = IndexCode.from_supports([{0, 1}])
    report = layer.verify(motivating, code)
    assert not report.valid
    assert calls == [(code, False)]


def test_execute_rejects_invalid_code(motivating, monkeypatch):
    layer = BusinessLayer()
    broken = IndexCode.from_supports([{0, 1}])
    original = layer.solve

    def solve_badly(inst, algorithm):
        return original(inst, algorithm).model_copy(update={"code": broken})

    monkeypatch.setattr(layer, "solve", solve_badly)
    with pytest.raises(InvalidCodeProduced):
        layer.execute(motivating, "ldg")
