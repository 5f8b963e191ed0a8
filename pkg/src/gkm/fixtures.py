"""Canonical graphs for the worked examples.

``gras``
    Real Grassmannian ``G_2(R^5)`` under the maximal torus of SO(5): two
    dots joined by a double edge (kernels ``(z, z)`` and ``(z, z^-1)``), and
    one star per dot.
``sp2-flag`` / ``sp2-flag-action``
    ``Sp(2)/T`` as the B2 adjoint orbit of the regular point ``(2, 1)``, and
    the sign-change subgroup ``W(Sp(1) x Sp(1))`` acting on its dots.
``sp22``
    ``Sp(1) x Sp(1)`` acting on ``Sp(2)/T``: two circles, edges with isotropy
    ``(z, z)`` and ``(z, z^-1)``, the second circle carrying an arrow ``-1``.
``u2-hp1``
    ``U(2)`` acting on ``HP^1``: one dot labelled by the torus, one star
    labelled ``SU(2)``, joined along ``x -> (x, -x)``.
``hp1-torus`` / ``hp1-torus-action``
    The torus GKM graph of ``HP^1`` and the coordinate swap of ``W(U(2))``.
``g2-k6`` / ``g2-k6-action``
    The G2 adjoint orbit of a long root (six dots, fifteen edges) and the
    Weyl group of the long-root subgroup ``SU(3)``.
``g2-typecc``
    ``SU(3)`` acting on that orbit: one circle, dots ``p`` and ``q = s_a(p)``
    for the short simple root ``a``, the arrow ``w`` in ``W(SU(3))`` with
    ``w(p) = q``, and an edge along ``ker a``.
"""
from __future__ import annotations

from dataclasses import dataclass

from gkm.abelian import AbelianEdge, AbelianGKMGraph, StarEdge, VertexGroupAction, build_orbit_graph, edge_label
from gkm.exact import LinearMap, integer_kernel_basis
from gkm.nonabelian import Circle, Dot, GKMEdge, NonAbelianGKMGraph, Star
from gkm.rootdata import (
    GroupDescriptor,
    build_root_system,
    enumerate_group,
    reflection,
    torus_descriptor,
    weight,
)
from gkm.serialize import ActionSpec, GraphDocument, document

G2_POINT = weight(0, 1)
G2_SHORT_ROOT = weight(1, 0)
G2_K_SIMPLE = (weight(3, 1), weight(0, 1))


def _col(*v) -> LinearMap:
    return LinearMap.from_columns([v])


def su2() -> GroupDescriptor:
    return GroupDescriptor(1, enumerate_group([LinearMap([[-1]])]), "SU(2)")


def gras_graph() -> AbelianGKMGraph:
    return AbelianGKMGraph(
        2,
        ("p", "q"),
        (AbelianEdge("p", "q", weight(-1, 1)), AbelianEdge("p", "q", weight(1, 1))),
        ("p*", "q*"),
        (StarEdge("p", "p*"), StarEdge("q", "q*")),
    )


def sp2_flag_graph() -> AbelianGKMGraph:
    return build_orbit_graph(build_root_system("B", 2), (2, 1))


def sp2_flag_action(graph: AbelianGKMGraph | None = None) -> VertexGroupAction:
    graph = graph or sp2_flag_graph()
    b2 = build_root_system("B", 2)
    group = enumerate_group([reflection(b2, (1, 0)), reflection(b2, (0, 1))])
    return VertexGroupAction.from_positions(graph, group)


def sp22_graph() -> NonAbelianGKMGraph:
    t = torus_descriptor(2)
    return NonAbelianGKMGraph(
        circles=(Circle("A", "p"), Circle("B", "q")),
        dots=(Dot("p", "A", t), Dot("q", "B", t), Dot("q'", "B", t, -LinearMap.identity(2))),
        edges=(
            GKMEdge("Delta", "p", "q", 1, _col(1, 1), _col(1, 1)),
            GKMEdge("Delta'", "p", "q'", 1, _col(1, -1), _col(1, -1)),
        ),
    )


def u2_graph() -> NonAbelianGKMGraph:
    return NonAbelianGKMGraph(
        circles=(Circle("A", "a"),),
        dots=(Dot("a", "A", torus_descriptor(2)),),
        stars=(Star("s", su2()),),
        edges=(GKMEdge("e", "a", "s", 1, _col(1, -1), _col(1)),),
    )


def hp1_torus_graph() -> AbelianGKMGraph:
    return AbelianGKMGraph(
        2,
        ("[1:0]", "[0:1]"),
        (AbelianEdge("[1:0]", "[0:1]", weight(1, 1)), AbelianEdge("[1:0]", "[0:1]", weight(1, -1))),
    )


def hp1_torus_action(graph: AbelianGKMGraph | None = None) -> VertexGroupAction:
    graph = graph or hp1_torus_graph()
    swap = LinearMap([[0, 1], [1, 0]])
    return VertexGroupAction.from_generators(graph, [(swap, ["[0:1]", "[1:0]"])])


def _g2():
    return build_root_system("G", 2)


def g2_k6_graph() -> AbelianGKMGraph:
    return build_orbit_graph(_g2(), G2_POINT)


def g2_k_weyl():
    g2 = _g2()
    return enumerate_group([reflection(g2, r) for r in G2_K_SIMPLE])


def g2_k6_action(graph: AbelianGKMGraph | None = None) -> VertexGroupAction:
    return VertexGroupAction.from_positions(graph or g2_k6_graph(), g2_k_weyl())


def g2_typecc_graph() -> NonAbelianGKMGraph:
    g2 = _g2()
    a1, a2 = G2_K_SIMPLE
    w = reflection(g2, a2) @ reflection(g2, a1)
    q = reflection(g2, G2_SHORT_ROOT).apply(G2_POINT)
    assert w.apply(G2_POINT) == q
    edge = integer_kernel_basis(edge_label(g2, G2_SHORT_ROOT))
    t = torus_descriptor(2)
    return NonAbelianGKMGraph(
        circles=(Circle("A", "p"),),
        dots=(Dot("p", "A", t), Dot("q", "A", t, w)),
        edges=(GKMEdge("S", "p", "q", 1, edge, edge),),
    )


def _action_doc(graph_fn, action_fn, **meta) -> GraphDocument:
    graph = graph_fn()
    return document(ActionSpec.from_action(graph, action_fn(graph)), **meta)


CATALOG = {
    "gras": lambda: document(gras_graph(), name="gras",
                             description="G_2(R^5) under the maximal torus of SO(5)"),
    "sp2-flag": lambda: document(sp2_flag_graph(), name="sp2-flag",
                                 description="Sp(2)/T as the B2 orbit of (2, 1)"),
    "sp2-flag-action": lambda: _action_doc(sp2_flag_graph, sp2_flag_action, name="sp2-flag-action",
                                           description="W(Sp(1) x Sp(1)) on the dots of sp2-flag"),
    "sp22": lambda: document(sp22_graph(), name="sp22",
                             description="Sp(1) x Sp(1) acting on Sp(2)/T"),
    "u2-hp1": lambda: document(u2_graph(), name="u2-hp1", description="U(2) acting on HP^1"),
    "hp1-torus": lambda: document(hp1_torus_graph(), name="hp1-torus",
                                  description="maximal torus of U(2) acting on HP^1"),
    "hp1-torus-action": lambda: _action_doc(hp1_torus_graph, hp1_torus_action, name="hp1-torus-action",
                                            description="W(U(2)) on the dots of hp1-torus"),
    "g2-k6": lambda: document(g2_k6_graph(), name="g2-k6",
                              description="G2 adjoint orbit of a long root (6 dots, 15 edges)"),
    "g2-k6-action": lambda: _action_doc(g2_k6_graph, g2_k6_action, name="g2-k6-action",
                                        description="W(SU(3)) on the dots of g2-k6"),
    "g2-typecc": lambda: document(g2_typecc_graph(), name="g2-typecc",
                                  description="SU(3) acting on the G2 orbit of a long root"),
}


@dataclass(frozen=True)
class OraclePair:
    """A non-abelian fixture with its torus graph and Weyl action.

    ``representatives`` maps each circle to the abelian dot at the same point.
    """

    nonabelian: str
    abelian: str
    action: str
    representatives: dict


def _dot_at(graph_fn, point) -> str:
    g = graph_fn()
    return g.dots[g.positions.index(weight(point))]


def oracle_pairs() -> list[OraclePair]:
    return [
        OraclePair("sp22", "sp2-flag", "sp2-flag-action",
                   {"A": _dot_at(sp2_flag_graph, (2, 1)), "B": _dot_at(sp2_flag_graph, (1, 2))}),
        OraclePair("u2-hp1", "hp1-torus", "hp1-torus-action", {"A": "[1:0]"}),
        OraclePair("g2-typecc", "g2-k6", "g2-k6-action", {"A": _dot_at(g2_k6_graph, G2_POINT)}),
    ]


def emit_fixture(name: str) -> GraphDocument:
    try:
        return CATALOG[name]()
    except KeyError:
        raise KeyError(f"unknown fixture {name!r}; available: {', '.join(CATALOG)}") from None
