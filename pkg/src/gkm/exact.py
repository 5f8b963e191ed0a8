"""Exact rational polynomials, linear maps and linear algebra.

Scalars are :class:`fractions.Fraction`. Polynomials store sparse terms; per
degree they convert to dense coefficient vectors over :func:`monomial_basis`,
which fixes the lexicographic layout shared by every solver.

The elimination kernel is the compiled :mod:`gkm._elim_ext` when available,
otherwise :mod:`gkm._elim_py`. Set ``GKM_PURE_PYTHON=1`` to force the
fallback.
"""
from __future__ import annotations

import math
import os
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

if os.environ.get("GKM_PURE_PYTHON"):
    from gkm._elim_py import rref as _rref

    BACKEND = "python"
else:
    try:
        from gkm._elim_ext import rref as _rref

        BACKEND = "compiled"
    except ImportError:  # pragma: no cover - depends on build
        from gkm._elim_py import rref as _rref

        BACKEND = "python"

Rational = Fraction
Monomial = tuple[int, ...]
Vector = tuple[Fraction, ...]


class ShapeError(ValueError):
    """Dimension mismatch between polynomials, maps or vectors."""


def as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError("floats are not accepted; pass int, Fraction or 'p/q' string")
    return Fraction(x)


# --------------------------------------------------------------------------
# monomials


@lru_cache(maxsize=None)
def monomial_basis(nvars: int, degree: int) -> tuple[Monomial, ...]:
    """All exponent tuples of total degree ``degree``, lexicographically descending.

    >>> monomial_basis(2, 2)
    ((2, 0), (1, 1), (0, 2))
    """
    if nvars < 0 or degree < 0:
        raise ValueError("nvars and degree must be non-negative")
    if nvars == 0:
        return ((),) if degree == 0 else ()
    if nvars == 1:
        return ((degree,),)
    out = []
    for first in range(degree, -1, -1):
        for rest in monomial_basis(nvars - 1, degree - first):
            out.append((first,) + rest)
    return tuple(out)


@lru_cache(maxsize=None)
def monomial_index(nvars: int, degree: int) -> dict[Monomial, int]:
    return {m: i for i, m in enumerate(monomial_basis(nvars, degree))}


def basis_size(nvars: int, degree: int) -> int:
    if nvars == 0:
        return 1 if degree == 0 else 0
    return math.comb(degree + nvars - 1, nvars - 1)


# --------------------------------------------------------------------------
# polynomials


class Polynomial:
    """Multivariate polynomial with rational coefficients in ``nvars`` variables."""

    __slots__ = ("nvars", "terms", "_hash")

    def __init__(self, nvars: int, terms: Mapping[Monomial, object] | None = None):
        if nvars < 0:
            raise ValueError("nvars must be non-negative")
        self.nvars = nvars
        clean: dict[Monomial, Fraction] = {}
        for mono, c in (terms or {}).items():
            mono = tuple(mono)
            if len(mono) != nvars or any(e < 0 for e in mono):
                raise ShapeError(f"monomial {mono} does not fit {nvars} variables")
            c = as_fraction(c)
            if c:
                clean[mono] = clean.get(mono, Fraction(0)) + c
                if not clean[mono]:
                    del clean[mono]
        self.terms = clean
        self._hash = None

    @classmethod
    def zero(cls, nvars: int) -> Polynomial:
        return cls(nvars)

    @classmethod
    def constant(cls, nvars: int, c) -> Polynomial:
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def variable(cls, nvars: int, i: int) -> Polynomial:
        """The coordinate function ``t_{i+1}`` (``i`` is zero-based)."""
        e = [0] * nvars
        e[i] = 1
        return cls(nvars, {tuple(e): 1})

    @classmethod
    def linear(cls, coeffs: Sequence) -> Polynomial:
        n = len(coeffs)
        return cls(n, {tuple(int(i == j) for j in range(n)): c for i, c in enumerate(coeffs)})

    @classmethod
    def from_vector(cls, nvars: int, degree: int, vec: Sequence) -> Polynomial:
        basis = monomial_basis(nvars, degree)
        if len(vec) != len(basis):
            raise ShapeError(f"expected {len(basis)} coefficients, got {len(vec)}")
        return cls(nvars, dict(zip(basis, vec)))

    # arithmetic -----------------------------------------------------------

    def _check(self, other: Polynomial) -> None:
        if other.nvars != self.nvars:
            raise ShapeError(f"variable count mismatch: {self.nvars} vs {other.nvars}")

    def __add__(self, other):
        if not isinstance(other, Polynomial):
            other = Polynomial.constant(self.nvars, other)
        self._check(other)
        terms = dict(self.terms)
        for m, c in other.terms.items():
            terms[m] = terms.get(m, 0) + c
        return Polynomial(self.nvars, terms)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.nvars, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, Polynomial):
            other = Polynomial.constant(self.nvars, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            c = as_fraction(other)
            return Polynomial(self.nvars, {m: c * v for m, v in self.terms.items()})
        self._check(other)
        terms: dict[Monomial, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                terms[m] = terms.get(m, 0) + c1 * c2
        return Polynomial(self.nvars, terms)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        out = Polynomial.constant(self.nvars, 1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.nvars == other.nvars and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == Polynomial.constant(self.nvars, other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self.terms.items())))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    # structure ------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def degree(self) -> int:
        """Total degree; ``-1`` for the zero polynomial."""
        return max((sum(m) for m in self.terms), default=-1)

    def is_homogeneous(self, degree: int | None = None) -> bool:
        degs = {sum(m) for m in self.terms}
        if not degs:
            return True
        if len(degs) > 1:
            return False
        return degree is None or degs == {degree}

    def coefficient_vector(self, degree: int) -> list[Fraction]:
        if not self.is_homogeneous(degree):
            raise ShapeError(f"polynomial is not homogeneous of degree {degree}")
        index = monomial_index(self.nvars, degree)
        vec = [Fraction(0)] * len(index)
        for m, c in self.terms.items():
            vec[index[m]] = c
        return vec

    def __call__(self, *point) -> Fraction:
        if len(point) == 1 and isinstance(point[0], (tuple, list)):
            point = tuple(point[0])
        if len(point) != self.nvars:
            raise ShapeError(f"expected {self.nvars} coordinates")
        pt = [as_fraction(x) for x in point]
        total = Fraction(0)
        for m, c in self.terms.items():
            term = c
            for x, e in zip(pt, m):
                if e:
                    term *= x**e
            total += term
        return total

    def pullback(self, lmap: LinearMap) -> Polynomial:
        return pullback(self, lmap)

    def leading_term(self) -> tuple[Monomial, Fraction]:
        """Lexicographically largest term (degree-blind lex on exponents)."""
        m = max(self.terms)
        return m, self.terms[m]

    def divmod(self, divisor: Polynomial) -> tuple[Polynomial, Polynomial]:
        """Multivariate division by a single polynomial in lex order.

        For one divisor the remainder is zero exactly when ``divisor`` divides
        ``self``.
        """
        self._check(divisor)
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        lm, lc = divisor.leading_term()
        quotient: dict[Monomial, Fraction] = {}
        remainder: dict[Monomial, Fraction] = {}
        p = self
        while p.terms:
            m, c = p.leading_term()
            if all(a >= b for a, b in zip(m, lm)):
                qm = tuple(a - b for a, b in zip(m, lm))
                qc = c / lc
                quotient[qm] = quotient.get(qm, 0) + qc
                p = p - Polynomial(self.nvars, {qm: qc}) * divisor
            else:
                remainder[m] = c
                p = p - Polynomial(self.nvars, {m: c})
        return Polynomial(self.nvars, quotient), Polynomial(self.nvars, remainder)

    def divisible_by(self, divisor: Polynomial) -> bool:
        return self.divmod(divisor)[1].is_zero()

    def __repr__(self):
        return f"Polynomial({self.nvars}, {str(self)!r})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for m in sorted(self.terms, key=lambda m: (-sum(m), tuple(-e for e in m))):
            c = self.terms[m]
            factors = []
            for i, e in enumerate(m):
                if e == 1:
                    factors.append(f"t{i + 1}")
                elif e > 1:
                    factors.append(f"t{i + 1}^{e}")
            mono = "*".join(factors)
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}*{mono}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out


# --------------------------------------------------------------------------
# linear maps


class LinearMap:
    """An exact ``rows x cols`` rational matrix, immutable and hashable.

    As a map it sends column vectors in ``Q^cols`` to ``Q^rows``. Zero-column
    maps are allowed (the degenerate rank-0 edge space).
    """

    __slots__ = ("rows", "cols", "entries", "_hash")

    def __init__(self, entries: Iterable[Iterable], cols: int | None = None):
        rows = tuple(tuple(as_fraction(x) for x in row) for row in entries)
        if cols is None:
            if not rows:
                raise ShapeError("cannot infer column count of an empty matrix")
            cols = len(rows[0])
        if any(len(r) != cols for r in rows):
            raise ShapeError("ragged matrix")
        self.rows = len(rows)
        self.cols = cols
        self.entries = rows
        self._hash = None

    @classmethod
    def identity(cls, n: int) -> LinearMap:
        return cls([[int(i == j) for j in range(n)] for i in range(n)], cols=n)

    @classmethod
    def zero(cls, rows: int, cols: int) -> LinearMap:
        return cls([[0] * cols for _ in range(rows)], cols=cols)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], rows: int | None = None) -> LinearMap:
        if not columns:
            if rows is None:
                raise ShapeError("row count required for a map with no columns")
            return cls([[] for _ in range(rows)], cols=0)
        n = len(columns[0])
        return cls([[col[i] for col in columns] for i in range(n)], cols=len(columns))

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def column(self, j: int) -> Vector:
        return tuple(r[j] for r in self.entries)

    def columns(self) -> list[Vector]:
        return [self.column(j) for j in range(self.cols)]

    def __matmul__(self, other):
        if isinstance(other, LinearMap):
            if self.cols != other.rows:
                raise ShapeError(f"cannot compose {self.shape} with {other.shape}")
            cols = other.columns()
            return LinearMap(
                [[sum((a * b for a, b in zip(row, col)), Fraction(0)) for col in cols] for row in self.entries],
                cols=other.cols,
            )
        return self.apply(other)

    def apply(self, vec: Sequence) -> Vector:
        if len(vec) != self.cols:
            raise ShapeError(f"vector of length {len(vec)} does not fit {self.shape}")
        v = [as_fraction(x) for x in vec]
        return tuple(sum((a * b for a, b in zip(row, v)), Fraction(0)) for row in self.entries)

    def transpose(self) -> LinearMap:
        return LinearMap([list(c) for c in self.columns()], cols=self.rows)

    def __neg__(self):
        return LinearMap([[-x for x in r] for r in self.entries], cols=self.cols)

    def scale(self, c) -> LinearMap:
        c = as_fraction(c)
        return LinearMap([[c * x for x in r] for r in self.entries], cols=self.cols)

    def rank(self) -> int:
        return rank(self.entries, self.cols)

    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_identity(self) -> bool:
        return self.is_square() and all(
            x == (1 if i == j else 0) for i, r in enumerate(self.entries) for j, x in enumerate(r)
        )

    def det(self) -> Fraction:
        if not self.is_square():
            raise ShapeError("determinant of a non-square matrix")
        a = [list(r) for r in self.entries]
        n = self.rows
        det = Fraction(1)
        for j in range(n):
            p = next((i for i in range(j, n) if a[i][j]), None)
            if p is None:
                return Fraction(0)
            if p != j:
                a[j], a[p] = a[p], a[j]
                det = -det
            det *= a[j][j]
            for i in range(j + 1, n):
                if a[i][j]:
                    f = a[i][j] / a[j][j]
                    a[i] = [x - f * y for x, y in zip(a[i], a[j])]
        return det

    def inverse(self) -> LinearMap:
        if not self.is_square():
            raise ShapeError("inverse of a non-square matrix")
        n = self.rows
        a = [list(r) + [Fraction(int(i == j)) for j in range(n)] for i, r in enumerate(self.entries)]
        for j in range(n):
            p = next((i for i in range(j, n) if a[i][j]), None)
            if p is None:
                raise ZeroDivisionError("matrix is singular")
            a[j], a[p] = a[p], a[j]
            piv = a[j][j]
            a[j] = [x / piv for x in a[j]]
            for i in range(n):
                if i != j and a[i][j]:
                    f = a[i][j]
                    a[i] = [x - f * y for x, y in zip(a[i], a[j])]
        return LinearMap([r[n:] for r in a], cols=n)

    def __eq__(self, other):
        if not isinstance(other, LinearMap):
            return NotImplemented
        return self.cols == other.cols and self.entries == other.entries

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.cols, self.entries))
        return self._hash

    def __lt__(self, other: LinearMap):
        return (self.rows, self.cols, self.entries) < (other.rows, other.cols, other.entries)

    def __repr__(self):
        body = "; ".join(" ".join(str(x) for x in r) for r in self.entries)
        return f"LinearMap[{self.rows}x{self.cols}]({body})"


def block_diagonal(a: LinearMap, b: LinearMap) -> LinearMap:
    rows = [list(r) + [0] * b.cols for r in a.entries]
    rows += [[0] * a.cols + list(r) for r in b.entries]
    return LinearMap(rows, cols=a.cols + b.cols)


# --------------------------------------------------------------------------
# pullback


def _linear_forms(lmap: LinearMap) -> list[Polynomial]:
    return [Polynomial(lmap.cols, {tuple(int(i == j) for i in range(lmap.cols)): x for j, x in enumerate(row)})
            for row in lmap.entries]


def pullback(f: Polynomial, lmap: LinearMap) -> Polynomial:
    """``f o lmap``: substitute variable ``i`` of ``f`` by row ``i`` of ``lmap``."""
    if f.nvars != lmap.rows:
        raise ShapeError(f"cannot pull back a {f.nvars}-variable polynomial along a {lmap.shape} map")
    forms = _linear_forms(lmap)
    powers: dict[tuple[int, int], Polynomial] = {}

    def power(i: int, e: int) -> Polynomial:
        key = (i, e)
        if key not in powers:
            powers[key] = forms[i] ** e
        return powers[key]

    out = Polynomial.zero(lmap.cols)
    for m, c in f.terms.items():
        term = Polynomial.constant(lmap.cols, c)
        for i, e in enumerate(m):
            if e:
                term = term * power(i, e)
        out = out + term
    return out


@lru_cache(maxsize=4096)
def pullback_matrix(lmap: LinearMap, degree: int) -> tuple[tuple[Fraction, ...], ...]:
    """Matrix of ``f -> f o lmap`` on degree-``degree`` coefficient vectors.

    Rows index ``monomial_basis(lmap.cols, degree)``; columns index
    ``monomial_basis(lmap.rows, degree)``.
    """
    source = monomial_basis(lmap.rows, degree)
    target_index = monomial_index(lmap.cols, degree)
    cols = []
    for m in source:
        img = pullback(Polynomial(lmap.rows, {m: 1}), lmap)
        col = [Fraction(0)] * len(target_index)
        for mono, c in img.terms.items():
            col[target_index[mono]] = c
        cols.append(col)
    return tuple(tuple(col[i] for col in cols) for i in range(len(target_index)))


# --------------------------------------------------------------------------
# linear algebra


def _integer_rows(matrix: Iterable[Sequence]) -> list[list[int]]:
    out = []
    for row in matrix:
        row = [as_fraction(x) for x in row]
        lcm = 1
        for x in row:
            lcm = lcm * x.denominator // math.gcd(lcm, x.denominator)
        out.append([int(x * lcm) for x in row])
    return out


def _ncols(matrix, ncols: int | None) -> int:
    if isinstance(matrix, LinearMap):
        return matrix.cols
    if ncols is not None:
        return ncols
    if not matrix:
        raise ShapeError("column count required for a matrix with no rows")
    return len(matrix[0])


def echelon(matrix, ncols: int | None = None) -> tuple[list[list[int]], list[int]]:
    """Fraction-free reduced row echelon form of a rational matrix."""
    n = _ncols(matrix, ncols)
    rows = matrix.entries if isinstance(matrix, LinearMap) else matrix
    ints = _integer_rows(rows)
    if any(len(r) != n for r in ints):
        raise ShapeError("ragged matrix")
    return _rref(ints, n)


def rank(matrix, ncols: int | None = None) -> int:
    return len(echelon(matrix, ncols)[1])


def nullspace(matrix, ncols: int | None = None) -> list[Vector]:
    """Basis of ``{x : A x = 0}``; empty iff the kernel is trivial.

    Vectors are primitive integer vectors (as Fractions) whose free
    coordinate is positive.
    """
    n = _ncols(matrix, ncols)
    rows, pivots = echelon(matrix, n)
    if rows:
        d = rows[0][pivots[0]]
        sign = 1 if d > 0 else -1
        d *= sign
    else:
        d, sign = 1, 1
    pivot_set = set(pivots)
    basis = []
    for j in range(n):
        if j in pivot_set:
            continue
        v = [0] * n
        v[j] = d
        for i, p in enumerate(pivots):
            v[p] = -sign * rows[i][j]
        g = 0
        for x in v:
            g = math.gcd(g, x)
        basis.append(tuple(Fraction(x // g) for x in v))
    return basis


def row_basis(vectors: Sequence[Sequence], ncols: int) -> list[Vector]:
    """Canonical basis of the span: rows of the reduced echelon form, pivots 1."""
    rows, pivots = echelon(list(vectors), ncols)
    return [tuple(Fraction(x, r[p]) for x in r) for r, p in zip(rows, pivots)]


def mat_vec(matrix: Sequence[Sequence], vec: Sequence) -> Vector:
    return tuple(sum((a * b for a, b in zip(row, vec)), Fraction(0)) for row in matrix)


def mat_mul(a: Sequence[Sequence], b: Sequence[Sequence], inner: int, ncols: int) -> list[list[Fraction]]:
    if inner == 0:
        return [[Fraction(0)] * ncols for _ in a]
    bt = list(zip(*b))
    return [[sum((x * y for x, y in zip(row, col)), Fraction(0)) for col in bt] for row in a]


@dataclass(frozen=True)
class GradedSubspace:
    """A linearly independent set of homogeneous degree-``degree`` polynomials."""

    degree: int
    nvars: int
    basis: tuple[Polynomial, ...]

    def __post_init__(self):
        for b in self.basis:
            if b.nvars != self.nvars or not b.is_homogeneous(self.degree) or b.is_zero():
                raise ShapeError("basis elements must be nonzero and homogeneous of the stated degree")
        if self.basis and rank(self.matrix(), basis_size(self.nvars, self.degree)) != len(self.basis):
            raise ValueError("basis is linearly dependent")

    @property
    def dim(self) -> int:
        return len(self.basis)

    def matrix(self) -> list[list[Fraction]]:
        """Basis coefficient vectors as rows."""
        return [b.coefficient_vector(self.degree) for b in self.basis]

    def contains(self, f: Polynomial) -> bool:
        if f.is_zero():
            return True
        if not f.is_homogeneous(self.degree):
            return False
        n = basis_size(self.nvars, self.degree)
        return rank(self.matrix() + [f.coefficient_vector(self.degree)], n) == self.dim

    @classmethod
    def spanned_by(cls, nvars: int, degree: int, vectors: Sequence[Sequence]) -> GradedSubspace:
        """Subspace spanned by coefficient vectors, reduced to its canonical basis."""
        n = basis_size(nvars, degree)
        vecs = [v for v in vectors if any(v)]
        basis = row_basis(vecs, n) if vecs else []
        return cls(degree, nvars, tuple(Polynomial.from_vector(nvars, degree, v) for v in basis))

    @classmethod
    def full(cls, nvars: int, degree: int) -> GradedSubspace:
        return cls(degree, nvars, tuple(Polynomial(nvars, {m: 1}) for m in monomial_basis(nvars, degree)))


def membership_constraints(space: GradedSubspace, degree: int) -> list[Vector]:
    """Rows ``C`` with ``C v = 0`` iff coefficient vector ``v`` lies in ``space``."""
    if space.degree != degree:
        raise ShapeError(f"subspace has degree {space.degree}, not {degree}")
    n = basis_size(space.nvars, degree)
    return nullspace(space.matrix(), n)


# --------------------------------------------------------------------------
# integer lattices


def primitive_integer_vector(vec: Sequence) -> tuple[int, ...]:
    """Smallest integer multiple of a nonzero rational vector (sign kept)."""
    row = _integer_rows([vec])[0]
    g = 0
    for x in row:
        g = math.gcd(g, x)
    if g == 0:
        raise ValueError("zero vector has no primitive multiple")
    return tuple(x // g for x in row)


def hermite_normal_form(rows: Sequence[Sequence[int]]) -> list[list[int]]:
    """Row-style Hermite normal form of an integer matrix, zero rows dropped.

    Pivots are positive and entries above each pivot lie in ``[0, pivot)``,
    which makes the result a canonical basis of the row lattice.
    """
    a = [list(map(int, r)) for r in rows]
    if not a:
        return []
    m, n = len(a), len(a[0])
    k = 0
    for j in range(n):
        if k == m:
            break
        while True:
            nz = [i for i in range(k, m) if a[i][j]]
            if not nz:
                break
            p = min(nz, key=lambda i: abs(a[i][j]))
            a[k], a[p] = a[p], a[k]
            done = True
            for i in range(k + 1, m):
                if a[i][j]:
                    q = a[i][j] // a[k][j]
                    a[i] = [x - q * y for x, y in zip(a[i], a[k])]
                    if a[i][j]:
                        done = False
            if done:
                break
        if a[k][j] == 0:
            continue
        if a[k][j] < 0:
            a[k] = [-x for x in a[k]]
        for i in range(k):
            q = a[i][j] // a[k][j]
            a[i] = [x - q * y for x, y in zip(a[i], a[k])]
        k += 1
    return [r for r in a[:k]]


def integer_kernel_basis(form: Sequence) -> LinearMap:
    """HNF basis of the lattice ``{x in Z^r : form . x = 0}``, as columns."""
    c = list(primitive_integer_vector(form))
    r = len(c)
    cols = [[int(i == j) for i in range(r)] for j in range(r)]
    for i in range(1, r):
        a0, ai = c[0], c[i]
        if ai == 0:
            continue
        g, x, y = _egcd(a0, ai)
        new0 = [x * u + y * v for u, v in zip(cols[0], cols[i])]
        newi = [(-ai // g) * u + (a0 // g) * v for u, v in zip(cols[0], cols[i])]
        cols[0], cols[i] = new0, newi
        c[0], c[i] = g, 0
    basis = hermite_normal_form(cols[1:])
    return LinearMap.from_columns(basis, rows=r)


def _egcd(a: int, b: int) -> tuple[int, int, int]:
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0
