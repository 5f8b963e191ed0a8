"""Exact equivariant cohomology from abelian and non-abelian GKM graphs."""
from gkm.exact import (
    BACKEND,
    GradedSubspace,
    LinearMap,
    Polynomial,
    membership_constraints,
    monomial_basis,
    nullspace,
    pullback,
    rank,
)

__all__ = [
    "BACKEND",
    "GradedSubspace",
    "LinearMap",
    "Polynomial",
    "membership_constraints",
    "monomial_basis",
    "nullspace",
    "pullback",
    "rank",
]
__version__ = "0.1.0"
