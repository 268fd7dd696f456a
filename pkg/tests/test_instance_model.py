from fractions import Fraction

import pytest
from pydantic import ValidationError

from src.models.code import CodedSymbol, IndexCode
from src.models.instance import (
    Instance,
    coding_gain,
    format_gain,
    format_support,
    parse_symbol_name,
    symbol_name,
    validate_instance,
)


def test_symbol_names_are_one_based():
    assert symbol_name(0) == "p1"
    assert parse_symbol_name("p12") == 11
    assert format_support({4, 0, 2}) == "p1⊕p3⊕p5"


@pytest.mark.parametrize("bad", ["p0", "q1", "p", "P1", "p01", 3])
def test_parse_symbol_name_rejects(bad):
    with pytest.raises(ValueError):
        parse_symbol_name(bad)


def test_single_unicast_shape(motivating):
    assert motivating.is_single_unicast()
    assert motivating.want[3] == frozenset({3})
    assert validate_instance(motivating) == []


def test_validate_reports_out_of_range_and_overlap():
    inst = Instance(
        n=2,
        k=2,
        has=(frozenset({0, 5}), frozenset()),
        want=(frozenset({0}), frozenset({1})),
    )
    violations = validate_instance(inst)
    assert "cliente c1: p6 em H fora de [p1, p2]" in violations
    assert "cliente c1: p1 em W e em H ao mesmo tempo" in violations
    assert len(violations) == 2


def test_validate_reports_client_count():
    inst = Instance(n=3, k=2, has=(frozenset(),), want=(frozenset({0}),))
    assert any("esperados 3 clientes" in v for v in validate_instance(inst))


def test_instance_is_frozen(motivating):
    with pytest.raises(ValidationError):
        motivating.n = 7


def test_coding_gain_is_exact():
    gain = coding_gain(5, 3)
    assert gain == Fraction(5, 3)
    assert format_gain(gain) == "5/3 (1.6667)"
    with pytest.raises(ValueError):
        coding_gain(5, 0)


def test_coded_symbol_rejects_empty_support():
    with pytest.raises(ValidationError):
        CodedSymbol(support=frozenset())


def test_index_code_formatting_and_reverse():
    code = IndexCode.from_supports([{0, 1}, {2, 4}])
    assert code.ell == 2
    assert str(code) == "{p1⊕p2, p3⊕p5}"
    assert code.reversed().supports() == [frozenset({2, 4}), frozenset({0, 1})]
