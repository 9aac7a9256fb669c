import autocyc
import pytest


def test_compose_applies_left_factor_first():
    p = autocyc.Permutation.from_cycles(3, "(1 2)")
    q = autocyc.Permutation.from_cycles(3, "(2 3)")
    assert list((p * q).images) == [2, 0, 1]
    assert (p * q).images != (q * p).images


def test_g27_graph():
    entry, graph = autocyc.catalog_graph("g27", "inner+tau")
    assert graph.vertex_count == 6
    assert graph.edge_count() == 5
    a, ba = entry.element("a"), entry.element("ba")
    assert not graph.adjacent(graph.vertex_of(a), graph.vertex_of(ba))
    rep = autocyc.report(entry.group, graph)
    assert rep["report"]["connected"] is False


def test_diameter_example():
    entry, graph = autocyc.catalog_graph("klein4_x_extraspecial27")
    x = graph.vertex_of(entry.tagged("x"))
    y = graph.vertex_of(entry.tagged("y"))
    assert autocyc.distance(graph, x, y) == 3
    assert autocyc.analyze(graph).diameter == 3


def test_unknown_key_error_kind():
    with pytest.raises(autocyc.Error) as info:
        autocyc.catalog_load("nope")
    assert info.value.kind == "UnknownKey"
    assert isinstance(info.value, RuntimeError)


def test_verify_theorem_h():
    entry = autocyc.catalog_load("frobenius(3,2)")
    v = autocyc.verify("H", entry.group, entry.action("inner"))
    assert v.hypotheses_hold and v.conclusion_holds and not v.failed()
    with pytest.raises(autocyc.Error) as info:
        a5 = autocyc.catalog_load("a5")
        autocyc.verify("D", a5.group, a5.action("s5"))
    assert info.value.kind == "ActionNotInner"


def test_metadata():
    meta = autocyc.catalog_metadata(autocyc.catalog_load("singer(3,2)"))
    assert meta["order"] == 9
    assert "field_polynomial" in meta


def test_group_from_json_round_trip():
    group = autocyc.catalog_load("a5").group
    back = autocyc.FiniteGroup.from_json(group.to_json())
    assert back.order == 60
    assert autocyc.exponent(back) == 30
