"""Command-line front end: ``gkm <command> ...``.

Every table lists the polynomial degree ``d`` next to the cohomological
degree ``2d``. ``--json`` switches any command to machine-readable output.
Exit status is 0 on success, 1 when a check fails (``oracle``,
``validate``) and 2 on bad input.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Sequence

from gkm.abelian import (
    GraphError,
    abelian_hilbert,
    abelian_solution,
    build_orbit_graph,
    invariant_hilbert,
    invariant_solution,
)
from gkm.dot import export_dot
from gkm.fixtures import CATALOG, emit_fixture
from gkm.nonabelian import GraphValidationError, nonabelian_hilbert, nonabelian_solution, validate
from gkm.rootdata import GroupTooLarge, build_root_system
from gkm.serialize import DocumentError, GraphDocument, document, dumps, load_graph, parse_rational


class UsageError(Exception):
    pass


def _table(header: Sequence[str], rows: Sequence[Sequence]) -> str:
    cells = [list(map(str, header))] + [[str(c) for c in r] for r in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(header))]
    return "\n".join("  ".join(c.rjust(w) for c, w in zip(r, widths)).rstrip() for r in cells)


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _load(path: str, *kinds: str) -> GraphDocument:
    doc = load_graph(path)
    if kinds and doc.kind not in kinds:
        raise UsageError(f"{path}: expected a {' or '.join(kinds)} document, found {doc.kind!r}")
    return doc


def _action_for(graph_doc: GraphDocument, action_path: str | None):
    if action_path is None:
        return None
    if graph_doc.kind != "abelian":
        raise UsageError("--action applies to abelian graphs only")
    return _load(action_path, "action").payload.bind(graph_doc.payload)


def _solve(doc: GraphDocument, action, degree: int):
    if doc.kind == "nonabelian":
        return nonabelian_solution(doc.payload, degree)
    if action is not None:
        return invariant_solution(doc.payload, action, degree)
    return abelian_solution(doc.payload, degree)


def cmd_hilbert(args) -> int:
    doc = _load(args.graph, "abelian", "nonabelian")
    action = _action_for(doc, args.action)
    if doc.kind == "nonabelian":
        dims = nonabelian_hilbert(doc.payload, args.max_degree)
    elif action is not None:
        dims = invariant_hilbert(doc.payload, action, args.max_degree)
    else:
        dims = abelian_hilbert(doc.payload, args.max_degree)
    if args.json:
        print(json.dumps({"kind": doc.kind, "invariant": action is not None,
                          "degrees": [{"d": d, "cohomologicalDegree": 2 * d, "dim": n}
                                      for d, n in enumerate(dims)]}))
    else:
        print(_table(["d", "2d", "dim"], [(d, 2 * d, n) for d, n in enumerate(dims)]))
    return 0


def cmd_basis(args) -> int:
    doc = _load(args.graph, "abelian", "nonabelian")
    sol = _solve(doc, _action_for(doc, args.action), args.degree)
    names = sol.circles if doc.kind == "nonabelian" else sol.dots
    if args.json:
        print(json.dumps({"d": args.degree, "cohomologicalDegree": 2 * args.degree, "components": list(names),
                          "basis": [[str(f) for f in tup] for tup in sol.basis]}))
        return 0
    print(f"d = {args.degree}  (2d = {2 * args.degree})  dim = {sol.dim}")
    rows = [(i, *map(str, tup)) for i, tup in enumerate(sol.basis)]
    if rows:
        print(_table(["#", *names], rows))
    return 0


def cmd_oracle(args) -> int:
    na = _load(args.nonabelian, "nonabelian").payload
    ab_doc = _load(args.abelian, "abelian")
    action = _action_for(ab_doc, args.action)
    left = nonabelian_hilbert(na, args.max_degree)
    right = invariant_hilbert(ab_doc.payload, action, args.max_degree)
    rows = [(d, 2 * d, x, y, "yes" if x == y else "NO") for d, (x, y) in enumerate(zip(left, right))]
    ok = left == right
    if args.json:
        print(json.dumps({"agree": ok, "degrees": [
            {"d": d, "cohomologicalDegree": c, "nonabelian": x, "abelianInvariant": y} for d, c, x, y, _ in rows]}))
    else:
        print(_table(["d", "2d", "nonabelian", "abelian^W", "agree"], rows))
        print("all degrees agree" if ok else "MISMATCH")
    return 0 if ok else 1


def _parse_weight(text: str) -> tuple:
    try:
        return tuple(parse_rational(x.strip()) for x in text.split(","))
    except DocumentError as exc:
        raise UsageError(f"--weight: {exc}") from None


def cmd_build_orbit(args) -> int:
    try:
        rs = build_root_system(args.family, args.rank)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    lam = _parse_weight(args.weight)
    if len(lam) != rs.rank:
        raise UsageError(f"--weight needs {rs.rank} coordinates for {rs.name}")
    graph = build_orbit_graph(rs, lam, prefix=args.prefix)
    doc = document(graph, name=f"{rs.name}-orbit", description=f"{rs.name} orbit of ({args.weight})")
    _emit(dumps(doc), args.output)
    if args.output:
        summary = {"dots": len(graph.dots), "edges": len(graph.edges), "output": args.output}
        print(json.dumps(summary) if args.json else
              f"wrote {args.output}: {summary['dots']} dots, {summary['edges']} edges")
    return 0


def cmd_fixture(args) -> int:
    if args.list or args.name is None:
        names = list(CATALOG)
        print(json.dumps(names) if args.json else "\n".join(names))
        return 0
    try:
        doc = emit_fixture(args.name)
    except KeyError as exc:
        raise UsageError(exc.args[0]) from None
    _emit(dumps(doc), args.output)
    if args.output:
        print(json.dumps({"fixture": args.name, "output": args.output}) if args.json
              else f"wrote {args.output}")
    return 0


def cmd_export_dot(args) -> int:
    text = export_dot(_load(args.graph))
    if args.json:
        if args.output:
            _emit(text, args.output)
        print(json.dumps({"dot": text} if not args.output else {"output": args.output}))
    else:
        _emit(text, args.output)
    return 0


def cmd_validate(args) -> int:
    try:
        doc = _load(args.graph)
    except (DocumentError, GraphError) as exc:
        problems = [str(exc)]
    else:
        problems = validate(doc.payload) if doc.kind == "nonabelian" else []
    if args.json:
        print(json.dumps({"valid": not problems, "violations": problems}))
    elif problems:
        print("\n".join(f"invalid: {p}" for p in problems))
    else:
        print(f"{args.graph}: valid {doc.kind} document")
    return 1 if problems else 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    parser = argparse.ArgumentParser(prog="gkm", description="Equivariant cohomology from GKM graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("hilbert", parents=[common], help="graded dimensions d = 0..D")
    p.add_argument("--graph", required=True)
    p.add_argument("--max-degree", type=int, default=6)
    p.add_argument("--action", help="action document; restricts an abelian graph to invariants")
    p.set_defaults(func=cmd_hilbert)

    p = sub.add_parser("basis", parents=[common], help="explicit basis in one degree")
    p.add_argument("--graph", required=True)
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--action")
    p.set_defaults(func=cmd_basis)

    p = sub.add_parser("oracle", parents=[common], help="compare a non-abelian graph with abelian invariants")
    p.add_argument("--nonabelian", required=True)
    p.add_argument("--abelian", required=True)
    p.add_argument("--action", required=True)
    p.add_argument("--max-degree", type=int, default=6)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("build-orbit", parents=[common], help="abelian graph of a Weyl orbit")
    p.add_argument("--family", required=True)
    p.add_argument("--rank", type=int, required=True)
    p.add_argument("--weight", required=True, help="comma-separated rationals, e.g. 1,1 or 1/2,0")
    p.add_argument("--prefix", default="p")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_build_orbit)

    p = sub.add_parser("fixture", parents=[common], help="write a shipped fixture")
    p.add_argument("name", nargs="?")
    p.add_argument("--list", action="store_true")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_fixture)

    p = sub.add_parser("export-dot", parents=[common], help="Graphviz DOT rendering")
    p.add_argument("--graph", required=True)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_export_dot)

    p = sub.add_parser("validate", parents=[common], help="check a document")
    p.add_argument("--graph", required=True)
    p.set_defaults(func=cmd_validate)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    for name in ("max_degree", "degree"):
        if getattr(args, name, 0) is not None and getattr(args, name, 0) < 0:
            print(f"error: --{name.replace('_', '-')} must be non-negative", file=sys.stderr)
            return 2
    try:
        return args.func(args)
    except (UsageError, DocumentError, GraphError, GraphValidationError, GroupTooLarge, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
