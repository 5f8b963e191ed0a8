"""JSON documents for abelian graphs, non-abelian graphs and dot actions.

Rationals are strings ``"p"`` or ``"p/q"``; matrices are row-major with
explicit ``rows``/``cols``. The schema lives in ``gkm/schema/graph-v1.json``;
unknown fields are rejected.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from pathlib import Path
from typing import Any, Union

import jsonschema

from gkm.abelian import AbelianEdge, AbelianGKMGraph, GraphError, StarEdge, VertexGroupAction
from gkm.exact import LinearMap
from gkm.nonabelian import Circle, Dot, GKMEdge, NonAbelianGKMGraph, Star
from gkm.rootdata import GroupDescriptor, GroupTooLarge, enumerate_group

SCHEMA_VERSION = 1


class DocumentError(ValueError):
    """A document failed to parse or validate; ``path`` locates the field."""

    def __init__(self, message: str, path: str = ""):
        self.path = path
        super().__init__(f"{path}: {message}" if path else message)


@dataclass(frozen=True)
class ActionSpec:
    """Generators of a dot action, independent of any particular graph object."""

    torus_rank: int
    generators: tuple[tuple[LinearMap, tuple[tuple[str, str], ...]], ...]

    def bind(self, graph: AbelianGKMGraph) -> VertexGroupAction:
        gens = []
        for m, images in self.generators:
            mapping = dict(images)
            if set(mapping) != set(graph.dots):
                raise GraphError("action images must list every dot of the graph exactly once")
            gens.append((m, [mapping[d] for d in graph.dots]))
        return VertexGroupAction.from_generators(graph, gens)

    @classmethod
    def from_action(cls, graph: AbelianGKMGraph, action: VertexGroupAction) -> ActionSpec:
        gens = []
        for m, perm in action.generator_permutations():
            gens.append((m, tuple(sorted((d, graph.dots[perm[i]]) for i, d in enumerate(graph.dots)))))
        return cls(graph.torus_rank, tuple(gens))


Payload = Union[AbelianGKMGraph, NonAbelianGKMGraph, ActionSpec]


@dataclass(frozen=True)
class GraphDocument:
    kind: str
    payload: Payload
    metadata: dict = field(default_factory=dict, compare=True, hash=False)
    schema_version: int = SCHEMA_VERSION


def schema() -> dict:
    text = resources.files("gkm").joinpath("schema/graph-v1.json").read_text(encoding="utf-8")
    return json.loads(text)


_VALIDATOR = None


def _validator():
    global _VALIDATOR
    if _VALIDATOR is None:
        s = schema()
        _VALIDATOR = jsonschema.Draft202012Validator(s)
    return _VALIDATOR


# --------------------------------------------------------------------------
# encoding


def rational_str(x: Fraction) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def parse_rational(s: str, path: str = "") -> Fraction:
    try:
        num, _, den = s.partition("/")
        value = Fraction(int(num), int(den) if den else 1)
    except (ValueError, ZeroDivisionError):
        raise DocumentError(f"malformed rational {s!r}", path) from None
    return value


def _vec(v) -> list[str]:
    return [rational_str(x) for x in v]


def _matrix(m: LinearMap) -> dict:
    return {"rows": m.rows, "cols": m.cols, "entries": [_vec(r) for r in m.entries]}


def _group(g: GroupDescriptor) -> dict:
    return {"name": g.name, "torusRank": g.torus_rank,
            "weylGenerators": [_matrix(m) for m in g.weyl.generators]}


def _abelian_payload(g: AbelianGKMGraph) -> dict:
    dots = []
    for i, d in enumerate(g.dots):
        entry: dict[str, Any] = {"id": d}
        if g.positions is not None:
            entry["position"] = _vec(g.positions[i])
        dots.append(entry)
    star_edges = []
    for s in g.star_edges:
        entry = {"dot": s.dot, "star": s.star}
        if s.label is not None:
            entry["label"] = _vec(s.label)
        star_edges.append(entry)
    return {
        "torusRank": g.torus_rank,
        "dots": dots,
        "edges": [{"a": e.a, "b": e.b, "label": _vec(e.label)} for e in g.edges],
        "stars": [{"id": s} for s in g.stars],
        "starEdges": star_edges,
    }


def _nonabelian_payload(g: NonAbelianGKMGraph) -> dict:
    dots = []
    for d in g.dots:
        entry = {"id": d.id, "circle": d.circle, "group": _group(d.group)}
        if d.arrow is not None:
            entry["arrow"] = _matrix(d.arrow)
        dots.append(entry)
    return {
        "circles": [{"id": c.id, "representative": c.representative} for c in g.circles],
        "dots": dots,
        "stars": [{"id": s.id, "group": _group(s.group)} for s in g.stars],
        "edges": [{"id": e.id, "a": e.a, "b": e.b, "rank": e.rank,
                   "embedA": _matrix(e.embed_a), "embedB": _matrix(e.embed_b)} for e in g.edges],
    }


def _action_payload(a: ActionSpec) -> dict:
    return {
        "torusRank": a.torus_rank,
        "generators": [{"matrix": _matrix(m), "images": dict(images)} for m, images in a.generators],
    }


def to_dict(doc: GraphDocument) -> dict:
    if doc.kind == "abelian":
        payload = _abelian_payload(doc.payload)
    elif doc.kind == "nonabelian":
        payload = _nonabelian_payload(doc.payload)
    elif doc.kind == "action":
        payload = _action_payload(doc.payload)
    else:
        raise DocumentError(f"unknown kind {doc.kind!r}", "kind")
    out = {"kind": doc.kind, "schemaVersion": doc.schema_version, "payload": payload}
    if doc.metadata:
        out["metadata"] = dict(doc.metadata)
    return out


def dumps(doc: GraphDocument) -> str:
    return json.dumps(to_dict(doc), indent=2) + "\n"


def save_graph(doc: GraphDocument, path: str | Path) -> None:
    Path(path).write_text(dumps(doc), encoding="utf-8")


# --------------------------------------------------------------------------
# decoding


def _read_vec(v, path) -> tuple[Fraction, ...]:
    return tuple(parse_rational(x, f"{path}[{i}]") for i, x in enumerate(v))


def _read_matrix(m, path) -> LinearMap:
    rows, cols, entries = m["rows"], m["cols"], m["entries"]
    if len(entries) != rows:
        raise DocumentError(f"expected {rows} rows, found {len(entries)}", f"{path}.entries")
    for i, r in enumerate(entries):
        if len(r) != cols:
            raise DocumentError(f"expected {cols} entries, found {len(r)}", f"{path}.entries[{i}]")
    return LinearMap([_read_vec(r, f"{path}.entries[{i}]") for i, r in enumerate(entries)], cols=cols)


def _read_group(g, path) -> GroupDescriptor:
    rank = g["torusRank"]
    gens = [_read_matrix(m, f"{path}.weylGenerators[{i}]") for i, m in enumerate(g["weylGenerators"])]
    for i, m in enumerate(gens):
        if m.shape != (rank, rank):
            raise DocumentError(f"generator must be {rank}x{rank}", f"{path}.weylGenerators[{i}]")
    try:
        weyl = enumerate_group(gens, rank=rank)
    except (ValueError, GroupTooLarge) as exc:
        raise DocumentError(str(exc), f"{path}.weylGenerators") from None
    return GroupDescriptor(rank, weyl, g.get("name", ""))


def _read_abelian(p, path) -> AbelianGKMGraph:
    dots = p["dots"]
    with_pos = [("position" in d) for d in dots]
    if any(with_pos) and not all(with_pos):
        raise DocumentError("either every dot has a position or none does", f"{path}.dots")
    positions = (tuple(_read_vec(d["position"], f"{path}.dots[{i}].position") for i, d in enumerate(dots))
                 if dots and all(with_pos) else None)
    edges = tuple(AbelianEdge(e["a"], e["b"], _read_vec(e["label"], f"{path}.edges[{i}].label"))
                  for i, e in enumerate(p["edges"]))
    star_edges = tuple(
        StarEdge(s["dot"], s["star"], _read_vec(s["label"], f"{path}.starEdges[{i}].label") if "label" in s else None)
        for i, s in enumerate(p.get("starEdges", [])))
    try:
        return AbelianGKMGraph(p["torusRank"], tuple(d["id"] for d in dots), edges,
                               tuple(s["id"] for s in p.get("stars", [])), star_edges, positions)
    except GraphError as exc:
        raise DocumentError(str(exc), path) from None


def _read_nonabelian(p, path) -> NonAbelianGKMGraph:
    circles = tuple(Circle(c["id"], c["representative"]) for c in p["circles"])
    dots = tuple(
        Dot(d["id"], d["circle"], _read_group(d["group"], f"{path}.dots[{i}].group"),
            _read_matrix(d["arrow"], f"{path}.dots[{i}].arrow") if "arrow" in d else None)
        for i, d in enumerate(p["dots"]))
    stars = tuple(Star(s["id"], _read_group(s["group"], f"{path}.stars[{i}].group"))
                  for i, s in enumerate(p["stars"]))
    edges = tuple(
        GKMEdge(e["id"], e["a"], e["b"], e["rank"],
                _read_matrix(e["embedA"], f"{path}.edges[{i}].embedA"),
                _read_matrix(e["embedB"], f"{path}.edges[{i}].embedB"))
        for i, e in enumerate(p["edges"]))
    return NonAbelianGKMGraph(circles, dots, stars, edges)


def _read_action(p, path) -> ActionSpec:
    gens = []
    for i, g in enumerate(p["generators"]):
        m = _read_matrix(g["matrix"], f"{path}.generators[{i}].matrix")
        if m.shape != (p["torusRank"],) * 2:
            raise DocumentError("generator matrix does not match torusRank", f"{path}.generators[{i}].matrix")
        gens.append((m, tuple(sorted(g["images"].items()))))
    return ActionSpec(p["torusRank"], tuple(gens))


def _json_path(error: jsonschema.ValidationError) -> str:
    out = "$"
    for part in error.absolute_path:
        out += f"[{part}]" if isinstance(part, int) else f".{part}"
    return out


def from_dict(data: Any) -> GraphDocument:
    errors = sorted(_validator().iter_errors(data), key=lambda e: list(map(str, e.absolute_path)))
    if errors:
        # the deepest error is the most specific one
        err = max(errors, key=lambda e: len(e.absolute_path))
        raise DocumentError(f"schema violation: {err.message}", _json_path(err))
    kind = data["kind"]
    p = data["payload"]
    if kind == "abelian":
        payload = _read_abelian(p, "$.payload")
    elif kind == "nonabelian":
        payload = _read_nonabelian(p, "$.payload")
    else:
        payload = _read_action(p, "$.payload")
    return GraphDocument(kind, payload, dict(data.get("metadata", {})), data["schemaVersion"])


def loads(text: str) -> GraphDocument:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"parse error at line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    return from_dict(data)


def load_graph(path: str | Path) -> GraphDocument:
    return loads(Path(path).read_text(encoding="utf-8"))


def document(payload: Payload, **metadata) -> GraphDocument:
    if isinstance(payload, AbelianGKMGraph):
        kind = "abelian"
    elif isinstance(payload, NonAbelianGKMGraph):
        kind = "nonabelian"
    elif isinstance(payload, ActionSpec):
        kind = "action"
    else:
        raise TypeError(f"cannot wrap {type(payload).__name__} in a document")
    return GraphDocument(kind, payload, metadata)
