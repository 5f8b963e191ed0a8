"""Graphviz DOT rendering of graph documents.

Output is a single ``digraph``: undirected GKM edges carry ``dir=none``, and
arrows between dots of a circle are real directed edges. Node and edge order
follows the document, so the text is deterministic.
"""
from __future__ import annotations

from gkm.abelian import AbelianGKMGraph
from gkm.exact import LinearMap
from gkm.nonabelian import NonAbelianGKMGraph
from gkm.serialize import ActionSpec, GraphDocument, rational_str


def _q(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"').replace("\n", "\\n") + '"'


def _vec(v) -> str:
    return "(" + ", ".join(rational_str(x) for x in v) + ")"


def _matrix(m: LinearMap) -> str:
    return "[" + "; ".join(" ".join(rational_str(x) for x in row) for row in m.entries) + "]"


def _attrs(**kw) -> str:
    return " [" + ", ".join(f"{k}={_q(str(v)) if isinstance(v, str) else v}" for k, v in kw.items()) + "]"


def _abelian(g: AbelianGKMGraph) -> list[str]:
    out = []
    for i, d in enumerate(g.dots):
        label = d if g.positions is None else f"{d}\n{_vec(g.positions[i])}"
        out.append(f"  {_q(d)}" + _attrs(shape="circle", style="filled", fillcolor="black",
                                         fontcolor="white", label=label) + ";")
    for s in g.stars:
        out.append(f"  {_q(s)}" + _attrs(shape="star", label=s) + ";")
    for e in g.edges:
        out.append(f"  {_q(e.a)} -> {_q(e.b)}" + _attrs(dir="none", label=_vec(e.label)) + ";")
    for s in g.star_edges:
        kw = {"dir": "none", "style": "dashed"}
        if s.label is not None:
            kw["label"] = _vec(s.label)
        out.append(f"  {_q(s.dot)} -> {_q(s.star)}" + _attrs(**kw) + ";")
    return out


def _nonabelian(g: NonAbelianGKMGraph) -> list[str]:
    out = []
    for n, c in enumerate(g.circles):
        out.append(f"  subgraph cluster_{n} {{")
        out.append(f"    label={_q(c.id)};")
        for d in g.dots:
            if d.circle == c.id:
                label = f"{d.id}\n{d.group.name}" if d.group.name else d.id
                out.append(f"    {_q(d.id)}" + _attrs(shape="circle", style="filled", fillcolor="black",
                                                      fontcolor="white", label=label) + ";")
        out.append("  }")
    for s in g.stars:
        label = f"{s.id}\n{s.group.name}" if s.group.name else s.id
        out.append(f"  {_q(s.id)}" + _attrs(shape="star", label=label) + ";")
    for d in g.dots:
        if d.arrow is not None:
            rep = g.circle(d.circle).representative
            out.append(f"  {_q(rep)} -> {_q(d.id)}" + _attrs(style="dotted", label=_matrix(d.arrow)) + ";")
    for e in g.edges:
        label = f"{e.id}: {_matrix(e.embed_a)} / {_matrix(e.embed_b)}"
        out.append(f"  {_q(e.a)} -> {_q(e.b)}" + _attrs(dir="none", label=label) + ";")
    return out


def _action(a: ActionSpec) -> list[str]:
    out = []
    for n, (m, images) in enumerate(a.generators):
        for src, dst in images:
            out.append(f"  {_q(src)} -> {_q(dst)}" + _attrs(label=f"g{n} {_matrix(m)}") + ";")
    return out


def export_dot(doc: GraphDocument) -> str:
    name = doc.metadata.get("name", "gkm") if doc.metadata else "gkm"
    if doc.kind == "abelian":
        body = _abelian(doc.payload)
    elif doc.kind == "nonabelian":
        body = _nonabelian(doc.payload)
    else:
        body = _action(doc.payload)
    return "\n".join([f"digraph {_q(str(name))} {{", *body, "}"]) + "\n"
