from __future__ import annotations

import copy
import json
from fractions import Fraction

import pytest
from gkm_strategies import abelian_graphs
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from gkm.exact import LinearMap
from gkm.fixtures import CATALOG, emit_fixture, oracle_pairs
from gkm.nonabelian import Circle, Dot, GKMEdge, NonAbelianGKMGraph, Star, validate
from gkm.rootdata import GroupDescriptor, enumerate_group, torus_descriptor
from gkm.serialize import (
    DocumentError,
    document,
    dumps,
    from_dict,
    load_graph,
    loads,
    parse_rational,
    rational_str,
    save_graph,
    schema,
    to_dict,
)


@pytest.mark.parametrize("name", CATALOG)
def test_fixture_round_trip(name, tmp_path):
    doc = emit_fixture(name)
    path = tmp_path / f"{name}.json"
    save_graph(doc, path)
    assert load_graph(path) == doc
    assert dumps(load_graph(path)) == dumps(doc)


@pytest.mark.parametrize("name", [n for n in CATALOG if emit_fixture(n).kind == "nonabelian"])
def test_nonabelian_fixtures_validate(name):
    assert validate(emit_fixture(name).payload) == []


def test_action_fixtures_bind_to_their_graphs():
    for pair in oracle_pairs():
        graph = emit_fixture(pair.abelian).payload
        action = emit_fixture(pair.action).payload.bind(graph)
        action.check(graph)
        for dot in pair.representatives.values():
            assert dot in graph.dots


def test_fixture_shapes():
    gras = emit_fixture("gras").payload
    assert (len(gras.dots), len(gras.edges), len(gras.stars), len(gras.star_edges)) == (2, 2, 2, 2)
    u2 = emit_fixture("u2-hp1").payload
    assert (len(u2.circles), len(u2.dots), len(u2.stars), len(u2.edges)) == (1, 1, 1, 1)
    flag = emit_fixture("sp2-flag").payload
    assert (len(flag.dots), len(flag.edges)) == (8, 16)


def test_unknown_fixture_lists_catalog():
    with pytest.raises(KeyError) as info:
        emit_fixture("nope")
    assert "sp22" in str(info.value) and "g2-typecc" in str(info.value)


def test_rationals_round_trip():
    for x in (Fraction(0), Fraction(-3), Fraction(7, 4), Fraction(-1, 9)):
        assert parse_rational(rational_str(x)) == x


def test_schema_is_versioned():
    s = schema()
    assert s["properties"]["schemaVersion"] == {"const": 1}


def _sp22_dict():
    return to_dict(emit_fixture("sp22"))


def test_zero_denominator_rejected():
    data = _sp22_dict()
    data["payload"]["edges"][0]["embedA"]["entries"][0][0] = "1/0"
    with pytest.raises(DocumentError) as info:
        from_dict(data)
    assert "embedA" in info.value.path


def test_arrows_not_allowed_in_abelian_payload():
    data = to_dict(emit_fixture("gras"))
    data["payload"]["dots"][0]["arrow"] = {"rows": 2, "cols": 2, "entries": [["1", "0"], ["0", "1"]]}
    with pytest.raises(DocumentError) as info:
        from_dict(data)
    assert info.value.path.startswith("$.payload.dots[0]")


def test_unknown_field_rejected_with_path():
    data = _sp22_dict()
    data["payload"]["circles"][1]["colour"] = "red"
    with pytest.raises(DocumentError) as info:
        from_dict(data)
    assert info.value.path == "$.payload.circles[1]"


def test_matrix_shape_mismatch_reported():
    data = _sp22_dict()
    data["payload"]["edges"][1]["embedB"]["rows"] = 3
    with pytest.raises(DocumentError) as info:
        from_dict(data)
    assert info.value.path == "$.payload.edges[1].embedB.entries"


def test_parse_error_has_position():
    with pytest.raises(DocumentError) as info:
        loads('{\n  "kind": "abelian",\n  oops\n}')
    assert "line 3" in str(info.value)


def test_wrong_schema_version():
    data = _sp22_dict()
    data["schemaVersion"] = 2
    with pytest.raises(DocumentError):
        from_dict(data)


def test_dangling_edge_in_abelian_payload():
    data = to_dict(emit_fixture("gras"))
    data["payload"]["edges"][0]["b"] = "ghost"
    with pytest.raises(DocumentError):
        from_dict(data)


def test_documents_are_not_mutated_by_loading():
    data = _sp22_dict()
    before = copy.deepcopy(data)
    from_dict(data)
    assert data == before


# --- randomized documents --------------------------------------------------

fracs = st.builds(Fraction, st.integers(-5, 5), st.integers(1, 3))


@st.composite
def full_rank_column(draw, rows):
    return LinearMap.from_columns([draw(st.tuples(*[fracs] * rows).filter(any))])


@st.composite
def nonabelian_graphs(draw):
    sign = GroupDescriptor(1, enumerate_group([LinearMap([[-1]])]), "SU(2)")
    ncircles = draw(st.integers(1, 3))
    circles, dots = [], []
    for c in range(ncircles):
        size = draw(st.integers(1, 2))
        ids = [f"c{c}d{i}" for i in range(size)]
        circles.append(Circle(f"C{c}", ids[0]))
        dots.append(Dot(ids[0], f"C{c}", torus_descriptor(2)))
        for i in ids[1:]:
            dots.append(Dot(i, f"C{c}", torus_descriptor(2), draw(st.sampled_from(
                [-LinearMap.identity(2), LinearMap([[0, 1], [1, 0]]), LinearMap([[1, 1], [0, 1]])]))))
    stars = [Star("s", sign)] if draw(st.booleans()) else []
    edges = []
    ids = [d.id for d in dots]
    for k in range(draw(st.integers(0, 3))):
        a = draw(st.sampled_from(ids))
        if stars and draw(st.booleans()):
            edges.append(GKMEdge(f"e{k}", a, "s", 1, draw(full_rank_column(2)), LinearMap([[1]])))
            continue
        b = draw(st.sampled_from([i for i in ids if i != a] or [None]))
        if b is not None:
            edges.append(GKMEdge(f"e{k}", a, b, 1, draw(full_rank_column(2)), draw(full_rank_column(2))))
    return NonAbelianGKMGraph(tuple(circles), tuple(dots), tuple(stars), tuple(edges))


@settings(max_examples=40, deadline=None, suppress_health_check=[HealthCheck.too_slow])
@given(abelian_graphs())
def test_random_abelian_round_trip(g):
    doc = document(g, name="random")
    assert loads(dumps(doc)) == doc


@settings(max_examples=40, deadline=None, suppress_health_check=[HealthCheck.too_slow])
@given(nonabelian_graphs())
def test_random_nonabelian_round_trip(g):
    doc = document(g)
    again = loads(dumps(doc))
    assert again == doc
    assert json.loads(dumps(again)) == to_dict(doc)
