"""Root systems, finite reflection groups and their polynomial invariants.

Roots live in coordinates on the Lie algebra of the maximal torus; the
inner product is carried explicitly as a Gram matrix so non-orthonormal
realizations (type A, G2) keep integer coordinates.

Realizations:

* ``B_n``: ``±e_i``, ``±e_i ± e_j``; ``C_n``: ``±2e_i``, ``±e_i ± e_j``;
  ``D_n``: ``±e_i ± e_j``; all with the standard inner product.
* ``A_n`` and ``G2``: coordinates in the basis of simple roots, with the
  symmetrized Cartan matrix as Gram matrix. For G2 the short simple root is
  the first basis vector.
"""
from __future__ import annotations

import os
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from gkm.exact import (
    GradedSubspace,
    LinearMap,
    Polynomial,
    ShapeError,
    Vector,
    as_fraction,
    block_diagonal,
    monomial_basis,
    nullspace,
    pullback_matrix,
)

Weight = Vector

DEFAULT_MAX_GROUP_ORDER = 10**6


class GroupTooLarge(RuntimeError):
    pass


def weight(*coords) -> Weight:
    if len(coords) == 1 and isinstance(coords[0], (tuple, list)):
        coords = tuple(coords[0])
    return tuple(as_fraction(c) for c in coords)


def _form(gram: LinearMap, u: Sequence, v: Sequence) -> Fraction:
    return sum((u[i] * gram.entries[i][j] * v[j] for i in range(len(u)) for j in range(len(v))), Fraction(0))


@dataclass(frozen=True)
class RootSystem:
    rank: int
    roots: tuple[Weight, ...]
    simple_roots: tuple[Weight, ...]
    inner_product: LinearMap
    name: str = ""

    def form(self, u: Sequence, v: Sequence) -> Fraction:
        return _form(self.inner_product, u, v)

    def covector(self, alpha: Sequence) -> Weight:
        """The linear form ``v -> (alpha, v)`` as a coefficient tuple."""
        return self.inner_product.apply(alpha)

    def simple_coordinates(self, alpha: Sequence) -> Vector:
        """Coefficients of ``alpha`` in the simple roots (rank must be full)."""
        basis = LinearMap.from_columns(self.simple_roots)
        if basis.rows != basis.cols:
            raise ValueError("simple roots do not form a basis")
        return basis.inverse().apply(alpha)

    @property
    def positive_roots(self) -> tuple[Weight, ...]:
        if not self.roots:
            return ()
        out = []
        for r in self.roots:
            if all(c >= 0 for c in self._simple_coords_partial(r)):
                out.append(r)
        return tuple(out)

    def _simple_coords_partial(self, alpha: Sequence) -> Vector:
        # simple roots may span a proper subspace (direct sums with a torus)
        cols = list(self.simple_roots)
        aug = [[c[i] for c in cols] + [-alpha[i]] for i in range(self.rank)]
        sol = [v for v in nullspace(aug, len(cols) + 1) if v[-1] != 0]
        if not sol:
            raise ValueError(f"{alpha} is not in the span of the simple roots")
        v = sol[0]
        return tuple(x / v[-1] for x in v[:-1])

    def is_root(self, alpha: Sequence) -> bool:
        return tuple(as_fraction(a) for a in alpha) in set(self.roots)


def _root_system(rank, roots, simple, gram, name) -> RootSystem:
    roots = sorted({weight(r) for r in roots})
    return RootSystem(rank, tuple(roots), tuple(weight(s) for s in simple), gram, name)


def _unit(n, i, c=1):
    v = [0] * n
    v[i] = c
    return v


def build_root_system(family: str, rank: int) -> RootSystem:
    """Standard root system of type ``family`` and the given rank.

    Supported: A1..A4, B1..B3, C1..C3, D2..D4, G2.
    """
    family = family.upper()
    supported = {"A": range(1, 5), "B": range(1, 4), "C": range(1, 4), "D": range(2, 5), "G": (2,)}
    if family not in supported or rank not in supported[family]:
        raise ValueError(f"unsupported root system {family}{rank}")
    n = rank
    name = f"{family}{rank}"
    if family in "BCD":
        roots = []
        for i in range(n):
            for j in range(i + 1, n):
                for si in (1, -1):
                    for sj in (1, -1):
                        v = [0] * n
                        v[i], v[j] = si, sj
                        roots.append(v)
        if family == "B":
            roots += [_unit(n, i, s) for i in range(n) for s in (1, -1)]
        elif family == "C":
            roots += [_unit(n, i, 2 * s) for i in range(n) for s in (1, -1)]
        simple = [[int(k == i) - int(k == i + 1) for k in range(n)] for i in range(n - 1)]
        if family == "B":
            simple.append(_unit(n, n - 1))
        elif family == "C":
            simple.append(_unit(n, n - 1, 2))
        else:
            simple.append([0] * (n - 2) + [1, 1])
        return _root_system(n, roots, simple, LinearMap.identity(n), name)
    if family == "A":
        roots = []
        for i in range(n):
            for j in range(i, n):
                v = [int(i <= k <= j) for k in range(n)]
                roots += [v, [-x for x in v]]
        gram = LinearMap([[2 if i == j else (-1 if abs(i - j) == 1 else 0) for j in range(n)] for i in range(n)])
        return _root_system(n, roots, [_unit(n, i) for i in range(n)], gram, name)
    # G2 in simple-root coordinates: (a1, a1) = 1, (a2, a2) = 3, (a1, a2) = -3/2
    positive = [(1, 0), (0, 1), (1, 1), (2, 1), (3, 1), (3, 2)]
    roots = positive + [(-a, -b) for a, b in positive]
    gram = LinearMap([[1, Fraction(-3, 2)], [Fraction(-3, 2), 3]])
    return _root_system(2, roots, [(1, 0), (0, 1)], gram, name)


def torus(rank: int) -> RootSystem:
    """The empty root system of a rank-``rank`` torus."""
    if rank < 1:
        raise ValueError("rank must be positive")
    return RootSystem(rank, (), (), LinearMap.identity(rank), f"T{rank}")


def direct_sum(a: RootSystem, b: RootSystem) -> RootSystem:
    za, zb = (Fraction(0),) * a.rank, (Fraction(0),) * b.rank
    roots = [r + zb for r in a.roots] + [za + r for r in b.roots]
    simple = [r + zb for r in a.simple_roots] + [za + r for r in b.simple_roots]
    name = "+".join(x for x in (a.name, b.name) if x)
    return RootSystem(a.rank + b.rank, tuple(sorted(roots)), tuple(simple),
                      block_diagonal(a.inner_product, b.inner_product), name)


def reflection_matrix(gram: LinearMap, alpha: Sequence) -> LinearMap:
    alpha = weight(alpha)
    n = len(alpha)
    norm = _form(gram, alpha, alpha)
    if norm == 0:
        raise ValueError("cannot reflect in a zero vector")
    cov = gram.apply(alpha)
    return LinearMap([[int(i == j) - 2 * alpha[i] * cov[j] / norm for j in range(n)] for i in range(n)])


def reflection(rs: RootSystem, alpha: Sequence) -> LinearMap:
    """Reflection in the hyperplane orthogonal to the root ``alpha``."""
    if not rs.is_root(alpha):
        raise ValueError(f"{tuple(alpha)} is not a root of {rs.name or 'the root system'}")
    return reflection_matrix(rs.inner_product, alpha)


@dataclass(frozen=True)
class FiniteMatrixGroup:
    rank: int
    elements: tuple[LinearMap, ...]
    generators: tuple[LinearMap, ...]
    identity_index: int = 0
    _index: dict = field(default=None, compare=False, repr=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "_index", {g: i for i, g in enumerate(self.elements)})

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, g: LinearMap) -> bool:
        return g in self._index

    def index(self, g: LinearMap) -> int:
        return self._index[g]

    def conjugate(self, h: LinearMap) -> FiniteMatrixGroup:
        """``{h g h^-1}``, enumerated from the conjugated generators."""
        hinv = h.inverse()
        return enumerate_group([h @ g @ hinv for g in self.generators], rank=self.rank)

    def same_elements(self, other: FiniteMatrixGroup) -> bool:
        return self.rank == other.rank and set(self.elements) == set(other.elements)


def max_group_order() -> int:
    return int(os.environ.get("GKM_MAX_GROUP_ORDER", DEFAULT_MAX_GROUP_ORDER))


def enumerate_group(generators: Sequence[LinearMap], rank: int | None = None,
                    cap: int | None = None) -> FiniteMatrixGroup:
    """Close ``generators`` under multiplication, breadth-first.

    Element order is discovery order, starting from the identity and
    multiplying by generators sorted by their entries.
    """
    gens = sorted(set(generators))
    if rank is None:
        if not gens:
            raise ValueError("rank required when there are no generators")
        rank = gens[0].rows
    for g in gens:
        if g.shape != (rank, rank):
            raise ShapeError(f"generator of shape {g.shape} in a rank-{rank} group")
        if g.det() == 0:
            raise ValueError("generators must be invertible")
    cap = max_group_order() if cap is None else cap
    ident = LinearMap.identity(rank)
    elements = [ident]
    seen = {ident}
    queue = deque([ident])
    while queue:
        g = queue.popleft()
        for s in gens:
            h = s @ g
            if h not in seen:
                if len(elements) >= cap:
                    raise GroupTooLarge(f"group closure exceeds {cap} elements")
                seen.add(h)
                elements.append(h)
                queue.append(h)
    return FiniteMatrixGroup(rank, tuple(elements), tuple(gens), 0)


def trivial_group(rank: int) -> FiniteMatrixGroup:
    return enumerate_group([], rank=rank)


def weyl_group(rs: RootSystem) -> FiniteMatrixGroup:
    return enumerate_group([reflection(rs, a) for a in rs.simple_roots], rank=rs.rank)


def orbit(group: FiniteMatrixGroup, lam: Sequence) -> list[Weight]:
    lam = weight(lam)
    if len(lam) != group.rank:
        raise ShapeError("weight length does not match the group rank")
    out, seen = [], set()
    for g in group.elements:
        img = g.apply(lam)
        if img not in seen:
            seen.add(img)
            out.append(img)
    return out


def stabilizer(group: FiniteMatrixGroup, lam: Sequence) -> FiniteMatrixGroup:
    lam = weight(lam)
    if len(lam) != group.rank:
        raise ShapeError("weight length does not match the group rank")
    elems = tuple(g for g in group.elements if g.apply(lam) == lam)
    gens = tuple(g for g in elems if not g.is_identity())
    return FiniteMatrixGroup(group.rank, elems, gens, 0)


def reynolds_vectors(group: FiniteMatrixGroup, degree: int) -> list[list[Fraction]]:
    """Reynolds average of each degree-``degree`` monomial, as coefficient vectors."""
    n = len(monomial_basis(group.rank, degree))
    total = [[Fraction(0)] * n for _ in range(n)]
    for g in group.elements:
        m = pullback_matrix(g, degree)
        for i in range(n):
            row = m[i]
            for j in range(n):
                if row[j]:
                    total[j][i] += row[j]
    k = group.order
    return [[x / k for x in col] for col in total]


def invariant_basis(group: FiniteMatrixGroup, degree: int) -> GradedSubspace:
    """Basis of the degree-``degree`` polynomials fixed by every group element."""
    if group.order == 1:
        return GradedSubspace.full(group.rank, degree)
    return GradedSubspace.spanned_by(group.rank, degree, reynolds_vectors(group, degree))


def _det_one_minus_q(g: LinearMap) -> list[Fraction]:
    """Coefficients in ``q`` of ``det(I - q g)`` by polynomial-entry Laplace expansion."""
    n = g.rows

    def pmul(a, b):
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            for j, y in enumerate(b):
                out[i + j] += x * y
        return out

    def padd(a, b, sign=1):
        out = [Fraction(0)] * max(len(a), len(b))
        for i, x in enumerate(a):
            out[i] += x
        for i, y in enumerate(b):
            out[i] += sign * y
        return out

    entries = [[[Fraction(int(i == j)), -g.entries[i][j]] for j in range(n)] for i in range(n)]

    def det(rows, cols):
        if not rows:
            return [Fraction(1)]
        r, rest = rows[0], rows[1:]
        acc = [Fraction(0)]
        for k, c in enumerate(cols):
            term = pmul(entries[r][c], det(rest, cols[:k] + cols[k + 1:]))
            acc = padd(acc, term, 1 if k % 2 == 0 else -1)
        return acc

    return det(list(range(n)), list(range(n)))


def molien_series(group: FiniteMatrixGroup, max_degree: int) -> list[Fraction]:
    """Power series of ``(1/|W|) sum_w 1/det(1 - q w)`` through ``max_degree``."""
    total = [Fraction(0)] * (max_degree + 1)
    for g in group.elements:
        p = _det_one_minus_q(g)
        inv = [Fraction(0)] * (max_degree + 1)
        inv[0] = 1 / p[0]
        for k in range(1, max_degree + 1):
            s = sum((p[i] * inv[k - i] for i in range(1, min(k, len(p) - 1) + 1)), Fraction(0))
            inv[k] = -s / p[0]
        total = [a + b for a, b in zip(total, inv)]
    return [x / group.order for x in total]


@dataclass(frozen=True)
class GroupDescriptor:
    """A compact group seen through its maximal torus rank and Weyl group."""

    torus_rank: int
    weyl: FiniteMatrixGroup
    name: str = ""

    def __post_init__(self):
        if self.weyl.rank != self.torus_rank:
            raise ShapeError("Weyl group rank does not match the torus rank")

    def invariants(self, degree: int) -> GradedSubspace:
        return invariant_basis(self.weyl, degree)


def torus_descriptor(rank: int, name: str | None = None) -> GroupDescriptor:
    return GroupDescriptor(rank, trivial_group(rank), name or f"T^{rank}")


def descriptor(rs: RootSystem, name: str | None = None) -> GroupDescriptor:
    return GroupDescriptor(rs.rank, weyl_group(rs), name or rs.name)
