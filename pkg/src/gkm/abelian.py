"""Abelian GKM graphs with star vertices, and their equivariant cohomology.

A dot is a torus-fixed point; a dot-dot edge is an invariant 2-sphere whose
label is the isotropy weight, stored as a primitive integer linear form on
the torus Lie algebra. A star is an exceptional orbit of a real projective
plane attached to one dot; star edges carry no constraint.

Degree-``d`` classes are tuples ``(f_p)`` of homogeneous polynomials with
``f_p`` and ``f_q`` agreeing on the kernel of the label of every edge
``pq``.
"""
from __future__ import annotations

from dataclasses import dataclass, field, replace
from collections import deque
from fractions import Fraction
from typing import Sequence

from gkm.exact import (
    LinearMap,
    Polynomial,
    ShapeError,
    Vector,
    basis_size,
    integer_kernel_basis,
    nullspace,
    primitive_integer_vector,
    pullback_matrix,
)
from gkm.rootdata import FiniteMatrixGroup, RootSystem, Weight, orbit, reflection, weight, weyl_group


class GraphError(ValueError):
    pass


@dataclass(frozen=True)
class AbelianEdge:
    a: str
    b: str
    label: Weight


@dataclass(frozen=True)
class StarEdge:
    dot: str
    star: str
    label: Weight | None = None


@dataclass(frozen=True)
class AbelianGKMGraph:
    torus_rank: int
    dots: tuple[str, ...]
    edges: tuple[AbelianEdge, ...] = ()
    stars: tuple[str, ...] = ()
    star_edges: tuple[StarEdge, ...] = ()
    positions: tuple[Weight, ...] | None = None
    _index: dict = field(default=None, compare=False, repr=False, hash=False)

    def __post_init__(self):
        r = self.torus_rank
        if r < 1:
            raise GraphError("torus rank must be positive")
        ids = list(self.dots) + list(self.stars)
        if len(set(ids)) != len(ids):
            raise GraphError("dot and star ids must be distinct")
        object.__setattr__(self, "_index", {d: i for i, d in enumerate(self.dots)})
        for e in self.edges:
            if e.a not in self._index or e.b not in self._index:
                raise GraphError(f"edge {e.a}-{e.b} references an unknown dot")
            if e.a == e.b:
                raise GraphError(f"self-loop at {e.a}")
            if len(e.label) != r or not any(e.label):
                raise GraphError(f"edge {e.a}-{e.b} needs a nonzero label of length {r}")
        stars = set(self.stars)
        for s in self.star_edges:
            if s.dot not in self._index or s.star not in stars:
                raise GraphError(f"star edge {s.dot}-{s.star} references an unknown vertex")
            if s.label is not None and len(s.label) != r:
                raise GraphError(f"star edge {s.dot}-{s.star} label has the wrong length")
        if self.positions is not None:
            if len(self.positions) != len(self.dots) or any(len(p) != r for p in self.positions):
                raise GraphError("positions must give one weight of length torus_rank per dot")

    def index(self, dot: str) -> int:
        return self._index[dot]

    def without_stars(self) -> AbelianGKMGraph:
        return replace(self, stars=(), star_edges=())

    def without_edge(self, i: int) -> AbelianGKMGraph:
        return replace(self, edges=self.edges[:i] + self.edges[i + 1:])

    def components(self) -> int:
        """Number of connected components of the dot-edge graph."""
        adj = {d: set() for d in self.dots}
        for e in self.edges:
            adj[e.a].add(e.b)
            adj[e.b].add(e.a)
        seen, count = set(), 0
        for d in self.dots:
            if d in seen:
                continue
            count += 1
            queue = deque([d])
            seen.add(d)
            while queue:
                for n in adj[queue.popleft()]:
                    if n not in seen:
                        seen.add(n)
                        queue.append(n)
        return count


def edge_label(rs: RootSystem, alpha: Sequence) -> Weight:
    """The root ``alpha`` as a primitive integer linear form on the torus."""
    return tuple(Fraction(x) for x in primitive_integer_vector(rs.covector(alpha)))


def build_orbit_graph(rs: RootSystem, lam: Sequence, prefix: str = "p") -> AbelianGKMGraph:
    """GKM graph of the adjoint orbit through ``lam``.

    Dots are the Weyl orbit of ``lam``; each positive root ``alpha`` moving a
    dot ``mu`` gives the edge ``{mu, s_alpha(mu)}``.
    """
    lam = weight(lam)
    if not any(lam):
        raise ValueError("orbit point must be nonzero")
    if len(lam) != rs.rank:
        raise ShapeError("orbit point does not match the rank")
    pts = orbit(weyl_group(rs), lam)
    index = {p: i for i, p in enumerate(pts)}
    ids = tuple(f"{prefix}{i}" for i in range(len(pts)))
    edges, seen = [], set()
    for alpha in rs.positive_roots:
        s = reflection(rs, alpha)
        label = edge_label(rs, alpha)
        for i, p in enumerate(pts):
            j = index[s.apply(p)]
            key = (min(i, j), max(i, j), label)
            if i != j and key not in seen:
                seen.add(key)
                edges.append(key)
    edges.sort()
    return AbelianGKMGraph(
        rs.rank,
        ids,
        tuple(AbelianEdge(ids[i], ids[j], label) for i, j, label in edges),
        positions=tuple(pts),
    )


@dataclass(frozen=True)
class AbelianSolution:
    degree: int
    dots: tuple[str, ...]
    basis: tuple[tuple[Polynomial, ...], ...]

    @property
    def dim(self) -> int:
        return len(self.basis)


def _edge_rows(graph: AbelianGKMGraph, degree: int) -> list[list[Fraction]]:
    n = basis_size(graph.torus_rank, degree)
    total = n * len(graph.dots)
    rows = []
    for e in graph.edges:
        emb = integer_kernel_basis(e.label)
        p = pullback_matrix(emb, degree)
        a, b = graph.index(e.a) * n, graph.index(e.b) * n
        for prow in p:
            row = [Fraction(0)] * total
            row[a:a + n] = prow
            for k, x in enumerate(prow):
                row[b + k] -= x
            rows.append(row)
    return rows


def _split(graph: AbelianGKMGraph, degree: int, vectors: list[Vector]) -> AbelianSolution:
    r, n = graph.torus_rank, basis_size(graph.torus_rank, degree)
    basis = tuple(
        tuple(Polynomial.from_vector(r, degree, v[k * n:(k + 1) * n]) for k in range(len(graph.dots)))
        for v in vectors
    )
    return AbelianSolution(degree, graph.dots, basis)


def abelian_solution(graph: AbelianGKMGraph, degree: int) -> AbelianSolution:
    """Basis of degree-``degree`` tuples satisfying every edge restriction."""
    n = basis_size(graph.torus_rank, degree)
    total = n * len(graph.dots)
    return _split(graph, degree, nullspace(_edge_rows(graph, degree), total))


def abelian_hilbert(graph: AbelianGKMGraph, max_degree: int) -> list[int]:
    return [abelian_solution(graph, d).dim for d in range(max_degree + 1)]


def satisfies_edges(graph: AbelianGKMGraph, tup: Sequence[Polynomial]) -> bool:
    for e in graph.edges:
        emb = integer_kernel_basis(e.label)
        if tup[graph.index(e.a)].pullback(emb) != tup[graph.index(e.b)].pullback(emb):
            return False
    return True


# --------------------------------------------------------------------------
# group actions on the dots


def _parallel(u: Sequence, v: Sequence) -> bool:
    return all(u[i] * v[j] == u[j] * v[i] for i in range(len(u)) for j in range(i + 1, len(u)))


def _transform_label(w: LinearMap, label: Sequence) -> Vector:
    """The linear form ``label o w^-1``."""
    return w.inverse().transpose().apply(label)


@dataclass(frozen=True)
class VertexGroupAction:
    """A finite matrix group acting on the torus and, compatibly, on the dots.

    ``permutations[i][k]`` is the index of the image of dot ``k`` under
    ``group.elements[i]``.
    """

    group: FiniteMatrixGroup
    permutations: tuple[tuple[int, ...], ...]

    @classmethod
    def trivial(cls, graph: AbelianGKMGraph) -> VertexGroupAction:
        from gkm.rootdata import trivial_group

        return cls(trivial_group(graph.torus_rank), (tuple(range(len(graph.dots))),))

    @classmethod
    def from_positions(cls, graph: AbelianGKMGraph, group: FiniteMatrixGroup) -> VertexGroupAction:
        """Act on dots through their positions: dot ``mu`` goes to ``w(mu)``."""
        if graph.positions is None:
            raise GraphError("graph has no dot positions")
        index = {p: i for i, p in enumerate(graph.positions)}
        perms = []
        for w in group.elements:
            try:
                perms.append(tuple(index[w.apply(p)] for p in graph.positions))
            except KeyError:
                raise GraphError("group does not preserve the set of dot positions") from None
        return cls(group, tuple(perms))

    @classmethod
    def from_generators(cls, graph: AbelianGKMGraph,
                        generators: Sequence[tuple[LinearMap, Sequence[str]]]) -> VertexGroupAction:
        """Close (matrix, dot images) generator pairs under composition.

        ``generators`` pairs a matrix with the image id of each dot, in dot
        order. Raises :class:`GraphError` if two words give the same matrix
        but different permutations.
        """
        from gkm.rootdata import enumerate_group

        gens = []
        for m, images in generators:
            if len(images) != len(graph.dots):
                raise GraphError("generator permutation must list one image per dot")
            try:
                perm = tuple(graph.index(x) for x in images)
            except KeyError as exc:
                raise GraphError(f"unknown dot {exc.args[0]!r} in permutation") from None
            if sorted(perm) != list(range(len(graph.dots))):
                raise GraphError("generator images are not a permutation of the dots")
            gens.append((m, perm))
        group = enumerate_group([m for m, _ in gens], rank=graph.torus_rank)
        perm_of = {LinearMap.identity(graph.torus_rank): tuple(range(len(graph.dots)))}
        queue = deque([LinearMap.identity(graph.torus_rank)])
        while queue:
            g = queue.popleft()
            for m, p in gens:
                h = m @ g
                hp = tuple(p[i] for i in perm_of[g])
                if h in perm_of:
                    if perm_of[h] != hp:
                        raise GraphError("generator permutations do not define a group action")
                else:
                    perm_of[h] = hp
                    queue.append(h)
        return cls(group, tuple(perm_of[g] for g in group.elements))

    def generator_permutations(self) -> list[tuple[LinearMap, tuple[int, ...]]]:
        return [(g, self.permutations[self.group.index(g)]) for g in self.group.generators]

    def check(self, graph: AbelianGKMGraph) -> None:
        """Raise :class:`GraphError` unless this is an action compatible with ``graph``."""
        k = len(graph.dots)
        if len(self.permutations) != self.group.order:
            raise GraphError("need one permutation per group element")
        if self.group.rank != graph.torus_rank:
            raise GraphError("group rank does not match the torus rank")
        for p in self.permutations:
            if sorted(p) != list(range(k)):
                raise GraphError("not a permutation of the dots")
        if self.permutations[self.group.identity_index] != tuple(range(k)):
            raise GraphError("identity must act trivially")
        for s in self.group.generators:
            ps = self.permutations[self.group.index(s)]
            for g, pg in zip(self.group.elements, self.permutations):
                if self.permutations[self.group.index(s @ g)] != tuple(ps[i] for i in pg):
                    raise GraphError("permutations are not a group action")
        edge_set = {}
        for e in graph.edges:
            key = frozenset((graph.index(e.a), graph.index(e.b)))
            edge_set.setdefault(key, []).append(e.label)
        for s in self.group.generators:
            ps = self.permutations[self.group.index(s)]
            for e in graph.edges:
                key = frozenset((ps[graph.index(e.a)], ps[graph.index(e.b)]))
                image = _transform_label(s, e.label)
                if not any(_parallel(image, lab) for lab in edge_set.get(key, [])):
                    raise GraphError(f"action does not map edge {e.a}-{e.b} to an edge")


def invariant_solution(graph: AbelianGKMGraph, action: VertexGroupAction, degree: int) -> AbelianSolution:
    """GKM classes with ``f_{w p} = f_p o w^-1`` for every group element ``w``."""
    action.check(graph)
    n = basis_size(graph.torus_rank, degree)
    total = n * len(graph.dots)
    rows = _edge_rows(graph, degree)
    # invariance under generators implies invariance under the group
    for w, perm in action.generator_permutations():
        p = pullback_matrix(w.inverse(), degree)
        for k in range(len(graph.dots)):
            src, dst = k * n, perm[k] * n
            for i in range(n):
                row = [Fraction(0)] * total
                row[dst + i] += 1
                for j, x in enumerate(p[i]):
                    row[src + j] -= x
                rows.append(row)
    return _split(graph, degree, nullspace(rows, total))


def invariant_dimension(graph: AbelianGKMGraph, action: VertexGroupAction, degree: int) -> int:
    return invariant_solution(graph, action, degree).dim


def invariant_hilbert(graph: AbelianGKMGraph, action: VertexGroupAction, max_degree: int) -> list[int]:
    return [invariant_dimension(graph, action, d) for d in range(max_degree + 1)]
