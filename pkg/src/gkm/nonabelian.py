"""Non-abelian GKM graphs and the algebra they define.

A graph has circles (orbits of maximal isotropy rank), dots inside circles,
stars outside them, arrows from each circle's representative to its other
dots, and edges from a dot to a dot or a star.

Coordinates. Every dot and star carries a :class:`GroupDescriptor` whose
torus coordinates are the variables of its polynomials. An arrow into dot
``a`` is the matrix of ``h_{Aa}``, sending the representative's torus
coordinates to those of ``a``; representatives carry no arrow (identity).
An edge of rank ``k`` has an abstract ``k``-dimensional edge space with an
embedding into the torus coordinates of each endpoint.

For a circle ``A`` the unknown is ``f_A``, invariant under the Weyl group of
the representative. Edge relations:

* dot-dot: ``f_A o h_{Aa}^-1 o embed_a == f_B o h_{Bb}^-1 o embed_b``;
* dot-star: ``f_A o h_{Aa}^-1 o embed_a`` lies in the image of the star's
  Weyl invariants under ``g -> g o embed_star``.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Sequence

from gkm.exact import (
    GradedSubspace,
    LinearMap,
    Polynomial,
    ShapeError,
    basis_size,
    mat_mul,
    membership_constraints,
    nullspace,
    pullback_matrix,
)
from gkm.rootdata import GroupDescriptor

DEFAULT_MAX_DEGREE = 6


class GraphValidationError(ValueError):
    def __init__(self, violations: Sequence[str]):
        self.violations = list(violations)
        super().__init__("invalid non-abelian GKM graph:\n  " + "\n  ".join(self.violations))


@dataclass(frozen=True)
class Circle:
    id: str
    representative: str


@dataclass(frozen=True)
class Dot:
    id: str
    circle: str
    group: GroupDescriptor
    arrow: LinearMap | None = None


@dataclass(frozen=True)
class Star:
    id: str
    group: GroupDescriptor


@dataclass(frozen=True)
class GKMEdge:
    id: str
    a: str
    b: str
    rank: int
    embed_a: LinearMap
    embed_b: LinearMap


@dataclass(frozen=True)
class NonAbelianGKMGraph:
    circles: tuple[Circle, ...] = ()
    dots: tuple[Dot, ...] = ()
    stars: tuple[Star, ...] = ()
    edges: tuple[GKMEdge, ...] = ()

    def dot(self, id: str) -> Dot:
        for d in self.dots:
            if d.id == id:
                return d
        raise KeyError(id)

    def star(self, id: str) -> Star:
        for s in self.stars:
            if s.id == id:
                return s
        raise KeyError(id)

    def circle(self, id: str) -> Circle:
        for c in self.circles:
            if c.id == id:
                return c
        raise KeyError(id)

    def is_star(self, id: str) -> bool:
        return any(s.id == id for s in self.stars)

    def representative(self, circle: str) -> Dot:
        return self.dot(self.circle(circle).representative)

    def without_edge(self, i: int) -> NonAbelianGKMGraph:
        return replace(self, edges=self.edges[:i] + self.edges[i + 1:])


def validate(graph: NonAbelianGKMGraph) -> list[str]:
    """All structural violations of ``graph``; an empty list means valid."""
    errors: list[str] = []
    circle_ids = [c.id for c in graph.circles]
    dot_ids = [d.id for d in graph.dots]
    star_ids = [s.id for s in graph.stars]
    edge_ids = [e.id for e in graph.edges]
    for kind, ids in (("circle", circle_ids), ("vertex", dot_ids + star_ids), ("edge", edge_ids)):
        dup = sorted({i for i in ids if ids.count(i) > 1})
        if dup:
            errors.append(f"duplicate {kind} ids: {', '.join(dup)}")
    dots = {d.id: d for d in graph.dots}
    stars = {s.id: s for s in graph.stars}
    circles = {c.id: c for c in graph.circles}
    members: dict[str, list[str]] = {c: [] for c in circles}
    for d in graph.dots:
        if d.circle not in circles:
            errors.append(f"dot {d.id}: unknown circle {d.circle!r}")
        else:
            members[d.circle].append(d.id)
    for c in graph.circles:
        rep = dots.get(c.representative)
        if rep is None:
            errors.append(f"circle {c.id}: representative {c.representative!r} is not a dot")
        elif rep.circle != c.id:
            errors.append(f"circle {c.id}: representative {rep.id} lies in circle {rep.circle}")
    reps = {c.representative for c in graph.circles}
    for d in graph.dots:
        if d.circle not in circles:
            continue
        if d.id in reps:
            if d.arrow is not None:
                errors.append(f"dot {d.id}: arrow on representative")
            continue
        if d.arrow is None:
            errors.append(f"dot {d.id}: missing arrow from representative")
            continue
        rep = dots.get(circles[d.circle].representative)
        if rep is None:
            continue
        if d.arrow.shape != (d.group.torus_rank, rep.group.torus_rank):
            errors.append(f"dot {d.id}: arrow has shape {d.arrow.shape}, expected "
                          f"{(d.group.torus_rank, rep.group.torus_rank)}")
        elif d.arrow.det() == 0:
            errors.append(f"dot {d.id}: arrow is not invertible")
        elif not rep.group.weyl.conjugate(d.arrow).same_elements(d.group.weyl):
            errors.append(f"dot {d.id}: arrow does not carry the representative's Weyl group onto the dot's")
    for e in graph.edges:
        if e.a not in dots:
            errors.append(f"edge {e.id}: endpoint {e.a!r} is not a dot")
            continue
        if e.b not in dots and e.b not in stars:
            errors.append(f"edge {e.id}: endpoint {e.b!r} is neither a dot nor a star")
            continue
        if e.a == e.b:
            errors.append(f"edge {e.id}: self-loop at {e.a}")
        if e.rank < 0:
            errors.append(f"edge {e.id}: negative rank")
            continue
        ends = ((e.a, dots[e.a].group, e.embed_a),
                (e.b, (dots.get(e.b) or stars.get(e.b)).group, e.embed_b))
        for name, group, emb in ends:
            if emb.shape != (group.torus_rank, e.rank):
                errors.append(f"edge {e.id}: embedding at {name} has shape {emb.shape}, "
                              f"expected {(group.torus_rank, e.rank)}")
            elif e.rank and emb.rank() != e.rank:
                errors.append(f"edge {e.id}: embedding at {name} has deficient column rank")
    for c, ms in members.items():
        if not ms:
            errors.append(f"circle {c}: no dots")
    return errors


def check(graph: NonAbelianGKMGraph) -> None:
    errors = validate(graph)
    if errors:
        raise GraphValidationError(errors)


def star_image_basis(star: Star, embed_star: LinearMap, degree: int) -> GradedSubspace:
    """Restrictions of the star's degree-``degree`` invariants to the edge space."""
    if embed_star.rows != star.group.torus_rank:
        raise ShapeError(f"embedding has {embed_star.rows} rows, star torus has rank {star.group.torus_rank}")
    if embed_star.cols and embed_star.rank() != embed_star.cols:
        raise ShapeError("star embedding must have full column rank")
    k = embed_star.cols
    inv = star.group.invariants(degree)
    p = pullback_matrix(embed_star, degree)
    vectors = [[sum((x * y for x, y in zip(row, b.coefficient_vector(degree))), Fraction(0)) for row in p]
               for b in inv.basis]
    return GradedSubspace.spanned_by(k, degree, vectors)


@dataclass(frozen=True)
class NonAbelianSolution:
    degree: int
    circles: tuple[str, ...]
    basis: tuple[tuple[Polynomial, ...], ...]

    @property
    def dim(self) -> int:
        return len(self.basis)


def _arrow_inverse(graph: NonAbelianGKMGraph, dot: Dot) -> LinearMap:
    if dot.arrow is None:
        return LinearMap.identity(dot.group.torus_rank)
    return dot.arrow.inverse()


def _restriction(graph: NonAbelianGKMGraph, dot_id: str, embed: LinearMap, degree: int,
                 basis_cols: list[list[Fraction]]) -> list[list[Fraction]]:
    """Matrix sending circle-basis coefficients to ``f_A o h^-1 o embed`` coefficients."""
    dot = graph.dot(dot_id)
    lmap = _arrow_inverse(graph, dot) @ embed
    p = pullback_matrix(lmap, degree)
    n = len(basis_cols)
    inner = basis_size(lmap.rows, degree)
    return mat_mul(p, basis_cols, inner, n) if p else []


def _circle_bases(graph: NonAbelianGKMGraph, degree: int) -> dict[str, GradedSubspace]:
    return {c.id: graph.representative(c.id).group.invariants(degree) for c in graph.circles}


def constraint_system(graph: NonAbelianGKMGraph, degree: int):
    """Assemble the linear relations on invariant-basis coefficients.

    Returns ``(rows, offsets, bases)`` where ``offsets[circle]`` is the
    first unknown belonging to that circle.
    """
    check(graph)
    bases = _circle_bases(graph, degree)
    offsets, total = {}, 0
    for c in graph.circles:
        offsets[c.id] = total
        total += bases[c.id].dim
    # columns of each circle's basis matrix (monomials x basis elements)
    cols = {}
    for cid, space in bases.items():
        vecs = [b.coefficient_vector(degree) for b in space.basis]
        n = basis_size(space.nvars, degree)
        cols[cid] = [[v[i] for v in vecs] for i in range(n)]
    rows: list[list[Fraction]] = []
    for e in graph.edges:
        if e.rank == 0:
            continue
        da = graph.dot(e.a)
        ra = _restriction(graph, e.a, e.embed_a, degree, cols[da.circle])
        if graph.is_star(e.b):
            target = star_image_basis(graph.star(e.b), e.embed_b, degree)
            c = membership_constraints(target, degree)
            block = mat_mul(c, ra, len(ra), bases[da.circle].dim)
            for brow in block:
                row = [Fraction(0)] * total
                row[offsets[da.circle]:offsets[da.circle] + len(brow)] = brow
                rows.append(row)
            continue
        db = graph.dot(e.b)
        rb = _restriction(graph, e.b, e.embed_b, degree, cols[db.circle])
        for arow, brow in zip(ra, rb):
            row = [Fraction(0)] * total
            oa, ob = offsets[da.circle], offsets[db.circle]
            for i, x in enumerate(arow):
                row[oa + i] += x
            for i, x in enumerate(brow):
                row[ob + i] -= x
            rows.append(row)
    return rows, offsets, bases, total


def nonabelian_solution(graph: NonAbelianGKMGraph, degree: int) -> NonAbelianSolution:
    """Basis of degree-``degree`` tuples ``(f_A)`` satisfying all edge relations."""
    rows, offsets, bases, total = constraint_system(graph, degree)
    out = []
    for v in nullspace(rows, total):
        tup = []
        for c in graph.circles:
            space = bases[c.id]
            coeffs = v[offsets[c.id]:offsets[c.id] + space.dim]
            f = Polynomial.zero(space.nvars)
            for x, b in zip(coeffs, space.basis):
                if x:
                    f = f + b * x
            tup.append(f)
        out.append(tuple(tup))
    return NonAbelianSolution(degree, tuple(c.id for c in graph.circles), tuple(out))


def nonabelian_hilbert(graph: NonAbelianGKMGraph, max_degree: int = DEFAULT_MAX_DEGREE) -> list[int]:
    return [nonabelian_solution(graph, d).dim for d in range(max_degree + 1)]


def circle_components(graph: NonAbelianGKMGraph) -> int:
    """Connected components of the circle graph joined by dot-dot edges."""
    circle_of = {d.id: d.circle for d in graph.dots}
    adj = {c.id: set() for c in graph.circles}
    for e in graph.edges:
        if e.b in circle_of:
            adj[circle_of[e.a]].add(circle_of[e.b])
            adj[circle_of[e.b]].add(circle_of[e.a])
    seen, count = set(), 0
    for c in adj:
        if c in seen:
            continue
        count += 1
        seen.add(c)
        queue = deque([c])
        while queue:
            for n in adj[queue.popleft()]:
                if n not in seen:
                    seen.add(n)
                    queue.append(n)
    return count


# --------------------------------------------------------------------------
# builders and transformations


def cohomogeneity_one_graph(kplus: GroupDescriptor, kminus: GroupDescriptor, h: GroupDescriptor,
                            embed_plus: LinearMap, embed_minus: LinearMap,
                            both_max_rank: bool) -> NonAbelianGKMGraph:
    """Graph of a cohomogeneity-one action with diagram ``G > K+, K- > H``.

    With both singular isotropy groups of maximal rank the graph is a single
    dot-dot segment; otherwise ``K-`` becomes a star attached to the ``K+``
    dot.
    """
    k = h.torus_rank
    if embed_plus.shape != (kplus.torus_rank, k) or embed_minus.shape != (kminus.torus_rank, k):
        raise ShapeError("embeddings must map the torus of H into the tori of K+ and K-")
    if k and (embed_plus.rank() != k or embed_minus.rank() != k):
        raise ValueError("embeddings must have full column rank")
    if both_max_rank and kplus.torus_rank != kminus.torus_rank:
        raise ValueError("K+ and K- of maximal rank must have equal torus rank")
    if not both_max_rank and kminus.torus_rank >= kplus.torus_rank:
        raise ValueError("the star side K- must have smaller rank than K+")
    if k > min(kplus.torus_rank, kminus.torus_rank):
        raise ValueError("H cannot have larger rank than K+ or K-")
    if both_max_rank:
        return NonAbelianGKMGraph(
            circles=(Circle("A", "a"), Circle("B", "b")),
            dots=(Dot("a", "A", kplus), Dot("b", "B", kminus)),
            edges=(GKMEdge("e", "a", "b", k, embed_plus, embed_minus),),
        )
    return NonAbelianGKMGraph(
        circles=(Circle("A", "a"),),
        dots=(Dot("a", "A", kplus),),
        stars=(Star("s", kminus),),
        edges=(GKMEdge("e", "a", "s", k, embed_plus, embed_minus),),
    )


def with_representative(graph: NonAbelianGKMGraph, circle: str, new_rep: str) -> NonAbelianGKMGraph:
    """Re-choose the representative of ``circle`` and recompute its arrows."""
    old = graph.dot(new_rep)
    if old.circle != circle:
        raise ValueError(f"{new_rep} is not in circle {circle}")
    to_new_inv = _arrow_inverse(graph, old)
    dots = []
    for d in graph.dots:
        if d.circle != circle:
            dots.append(d)
        elif d.id == new_rep:
            dots.append(replace(d, arrow=None))
        else:
            arrow = d.arrow if d.arrow is not None else LinearMap.identity(d.group.torus_rank)
            dots.append(replace(d, arrow=arrow @ to_new_inv))
    circles = tuple(Circle(c.id, new_rep) if c.id == circle else c for c in graph.circles)
    return replace(graph, circles=circles, dots=tuple(dots))


def reparametrize_edge(graph: NonAbelianGKMGraph, edge_id: str, s: LinearMap) -> NonAbelianGKMGraph:
    """Change coordinates on an edge space by the invertible map ``s``."""
    edges = tuple(replace(e, embed_a=e.embed_a @ s, embed_b=e.embed_b @ s) if e.id == edge_id else e
                  for e in graph.edges)
    return replace(graph, edges=edges)


def freeness_check(hilbert: Sequence[int], base_degrees: Sequence[int]) -> tuple[bool, list[int]]:
    """Divide a Hilbert series by the Hilbert series of a free polynomial ring.

    Multiplies ``sum hilbert[d] q^d`` by ``prod (1 - q^b)`` and truncates at
    the last known degree. A free module over a polynomial ring with
    generators in ``base_degrees`` gives non-negative integer coefficients.
    """
    coeffs = [Fraction(x) for x in hilbert]
    top = len(coeffs) - 1
    for b in base_degrees:
        if b < 1:
            raise ValueError("base degrees must be positive")
        coeffs = [c - (coeffs[i - b] if i >= b else 0) for i, c in enumerate(coeffs)]
    ok = all(c >= 0 and c.denominator == 1 for c in coeffs[:top + 1])
    return ok, [int(c) if c.denominator == 1 else c for c in coeffs]
