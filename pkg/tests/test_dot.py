from __future__ import annotations

import re

import pytest

from gkm.abelian import AbelianGKMGraph
from gkm.dot import export_dot
from gkm.fixtures import CATALOG, emit_fixture
from gkm.nonabelian import NonAbelianGKMGraph
from gkm.serialize import document

NODE = re.compile(r'^\s*"[^"]*" \[shape="circle"')
STAR = re.compile(r'^\s*"[^"]*" \[shape="star"')
UNDIRECTED = re.compile(r'->.*dir="none"')
ARROW = re.compile(r'->.*style="dotted"')


def _count(pattern, text):
    return sum(1 for line in text.splitlines() if pattern.search(line))


def test_sp22_structure():
    text = export_dot(emit_fixture("sp22"))
    assert text.count("subgraph cluster_") == 2
    assert _count(NODE, text) == 3
    assert _count(UNDIRECTED, text) == 2
    assert _count(ARROW, text) == 1
    assert '"q" -> "q\'"' in text and "[-1 0; 0 -1]" in text


def test_gras_nodes():
    text = export_dot(emit_fixture("gras"))
    assert _count(NODE, text) == 2
    assert _count(STAR, text) == 2


@pytest.mark.parametrize("doc", [
    document(NonAbelianGKMGraph((), ())),
    document(AbelianGKMGraph(1, ())),
])
def test_empty_graph_is_empty_digraph(doc):
    assert export_dot(doc) == 'digraph "gkm" {\n}\n'


@pytest.mark.parametrize("name", CATALOG)
def test_output_is_deterministic(name):
    first = export_dot(emit_fixture(name))
    assert first == export_dot(emit_fixture(name))
    assert first.startswith("digraph ") and first.rstrip().endswith("}")
    assert first.count("{") == first.count("}")


def test_quotes_are_escaped():
    g = AbelianGKMGraph(1, ('say "hi"',))
    assert r'"say \"hi\""' in export_dot(document(g))
