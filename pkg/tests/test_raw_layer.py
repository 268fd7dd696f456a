import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from src.errors import ParseError
from src.layers.raw_layer import RawLayer, instance_to_dict, parse_instance, serialize_instance
from src.models.code import IndexCode
from src.models.instance import Instance


def _doc(**overrides):
    doc = {
        "n": 2,
        "k": 2,
        "payload_size_bytes": 1,
        "clients": [
            {"has": ["p2"], "want": ["p1"]},
            {"has": ["p1"], "want": ["p2"]},
        ],
    }
    doc.update(overrides)
    return doc


def test_parse_minimal_document(alice_bob):
    inst = parse_instance(json.dumps(_doc()))
    assert inst == alice_bob


def test_payload_size_defaults_to_one():
    doc = _doc()
    del doc["payload_size_bytes"]
    assert parse_instance(json.dumps(doc)).payload_size_bytes == 1


def test_malformed_json_reports_line():
    with pytest.raises(ParseError) as err:
        parse_instance('{\n  "n": 2,\n  "k": }')
    assert err.value.location.startswith("linha 3")


def test_unknown_field_reports_path():
    doc = _doc()
    doc["clients"][0] = {"hass": ["p2"], "want": ["p1"]}
    with pytest.raises(ParseError) as err:
        parse_instance(json.dumps(doc))
    assert err.value.location == "clients[0].hass"
    assert "campo desconhecido" in str(err.value)


def test_client_count_must_match_n():
    with pytest.raises(ParseError) as err:
        parse_instance(json.dumps(_doc(n=3)))
    assert err.value.location == "n"


def test_bad_symbol_name_reports_index():
    doc = _doc()
    doc["clients"][1]["has"] = ["p1", "x7"]
    with pytest.raises(ParseError) as err:
        parse_instance(json.dumps(doc))
    assert err.value.location == "clients[1].has[1]"


def test_serialize_is_canonical(motivating):
    text = serialize_instance(motivating)
    assert parse_instance(text) == motivating
    assert instance_to_dict(motivating)["clients"][1] == {"has": ["p3", "p4"], "want": ["p2"]}


def test_code_file_format():
    raw = RawLayer()
    code = raw.parse_code('[["p1","p2"],["p3","p5"],["p2","p3","p4"]]')
    assert code.supports() == [frozenset({0, 1}), frozenset({2, 4}), frozenset({1, 2, 3})]
    assert raw.parse_code(raw.serialize_code(code)) == code
    assert raw.serialize_code(IndexCode()) == "[]\n"


@pytest.mark.parametrize("text, location", [
    ('{"a": 1}', "<raiz>"),
    ('[["p1"], []]', "[1]"),
    ('[["p1", "z"]]', "[0][1]"),
])
def test_code_parse_errors(text, location):
    with pytest.raises(ParseError) as err:
        RawLayer().parse_code(text)
    assert err.value.location == location


def test_execute_reads_both_files(tmp_path, motivating):
    raw = RawLayer()
    inst_path = tmp_path / "inst.json"
    code_path = tmp_path / "code.json"
    raw.save_instance(motivating, str(inst_path))
    raw.save_code(IndexCode.from_supports([{0, 1}]), str(code_path))

    inst, code = raw.execute(str(inst_path), str(code_path))
    assert inst == motivating
    assert code.ell == 1
    assert raw.execute(str(inst_path))[1] is None


@st.composite
def instances(draw):
    n = draw(st.integers(min_value=0, max_value=6))
    k = draw(st.integers(min_value=0, max_value=8))
    symbols = st.sets(st.integers(min_value=0, max_value=k - 1)) if k else st.just(set())
    has, want = [], []
    for _ in range(n):
        h = draw(symbols)
        w = draw(symbols) - h
        has.append(frozenset(h))
        want.append(frozenset(w))
    size = draw(st.integers(min_value=1, max_value=64))
    return Instance(n=n, k=k, has=tuple(has), want=tuple(want), payload_size_bytes=size)


@given(instances())
def test_parse_serialize_round_trip(inst):
    assert parse_instance(serialize_instance(inst)) == inst
