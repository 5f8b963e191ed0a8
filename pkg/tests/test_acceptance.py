"""Acceptance criteria 1-8.

Run with pytest (a PASS/FAIL line per criterion appears in the terminal
summary) or directly: ``python3 tests/test_acceptance.py``.
"""
from __future__ import annotations

import random
import subprocess
import sys
import time
from pathlib import Path

import pytest

from gkm.abelian import (
    AbelianEdge,
    AbelianGKMGraph,
    StarEdge,
    abelian_hilbert,
    abelian_solution,
    invariant_hilbert,
    invariant_solution,
)
from gkm.exact import GradedSubspace, LinearMap, Polynomial
from gkm.fixtures import G2_POINT, emit_fixture
from gkm.nonabelian import freeness_check, nonabelian_hilbert, nonabelian_solution
from gkm.serialize import dumps, loads

TESTS = Path(__file__).resolve().parent
RESULTS: dict[int, tuple[bool, str]] = {}


def load(name: str):
    """A fixture as it arrives from disk: serialized, then parsed."""
    return loads(dumps(emit_fixture(name))).payload


def t(i: int) -> Polynomial:
    return Polynomial.variable(2, i)


def timed(limit: float):
    def wrap(fn):
        def run():
            start = time.perf_counter()
            ok, detail = fn()
            elapsed = time.perf_counter() - start
            if limit and elapsed >= limit:
                ok, detail = False, f"{detail}; took {elapsed:.2f}s, limit {limit}s"
            return ok, f"{detail} [{elapsed:.2f}s]"
        run.__name__ = fn.__name__
        run.__doc__ = fn.__doc__
        return run
    return wrap


@timed(1.0)
def criterion_1():
    """Gr2(R^5): Hilbert series and the two line restrictions."""
    g = load("gras")
    dims = abelian_hilbert(g, 6)
    diag, anti = LinearMap.from_columns([(1, 1)]), LinearMap.from_columns([(1, -1)])
    identities = all(f.pullback(diag) == h.pullback(diag) and f.pullback(anti) == h.pullback(anti)
                     for d in range(4) for f, h in abelian_solution(g, d).basis)
    return dims == [1, 2, 4, 6, 8, 10, 12] and identities, f"hilbert {dims}, line identities {identities}"


@timed(1.0)
def criterion_2():
    """sp22: Hilbert series and both divisibility conditions."""
    g = load("sp22")
    dims = nonabelian_hilbert(g, 6)
    minus = -LinearMap.identity(2)
    div = all((f1 - f2).divisible_by(t(0) - t(1)) and (f1 - f2.pullback(minus)).divisible_by(t(0) + t(1))
              for d in range(7) for f1, f2 in nonabelian_solution(g, d).basis)
    return dims == [1, 2, 4, 6, 8, 10, 12] and div, f"hilbert {dims}, divisibility {div}"


@timed(1.0)
def criterion_3():
    """u2: Hilbert series and divisibility of f - f o swap by t1 + t2."""
    g = load("u2-hp1")
    dims = nonabelian_hilbert(g, 6)
    swap = LinearMap([[0, 1], [1, 0]])
    div = all((f - f.pullback(swap)).divisible_by(t(0) + t(1))
              for d in range(7) for (f,) in nonabelian_solution(g, d).basis)
    return dims == [1, 1, 3, 3, 5, 5, 7] and div, f"hilbert {dims}, divisibility {div}"


def _oracle(na: str, ab: str, act: str):
    graph = load(ab)
    action = load(act).bind(graph)
    left = nonabelian_hilbert(load(na), 6)
    right = invariant_hilbert(graph, action, 6)
    return left, right, graph, action


@timed(5.0)
def criterion_4():
    """sp22 against W(Sp(1) x Sp(1))-invariants of the B2 flag graph."""
    left, right, _, _ = _oracle("sp22", "sp2-flag", "sp2-flag-action")
    return left == right, f"nonabelian {left}, abelian^W {right}"


@timed(10.0)
def criterion_5():
    """typecc against W(K)-invariants of the G2 K6 graph, plus subspace agreement at p."""
    left, right, graph, action = _oracle("g2-typecc", "g2-k6", "g2-k6-action")
    size = (len(graph.dots), len(graph.edges))
    p = graph.positions.index(G2_POINT)
    na = load("g2-typecc")
    same_space = True
    for d in range(1, 6):
        at_p = GradedSubspace.spanned_by(2, d, [tup[p].coefficient_vector(d)
                                                for tup in invariant_solution(graph, action, d).basis])
        f_a = GradedSubspace.spanned_by(2, d, [f.coefficient_vector(d)
                                               for (f,) in nonabelian_solution(na, d).basis])
        same_space &= at_p.basis == f_a.basis
    ok = left == right and size == (6, 15) and same_space
    return ok, f"nonabelian {left}, abelian^W {right}, graph {size}, subspaces agree {same_space}"


def _random_abelian(rng: random.Random) -> AbelianGKMGraph:
    r = rng.randint(1, 3)
    dots = tuple(f"v{i}" for i in range(rng.randint(1, 4)))
    edges = []
    for _ in range(rng.randint(0, 5) if len(dots) > 1 else 0):
        a, b = rng.sample(dots, 2)
        label = [0] * r
        while not any(label):
            label = [rng.randint(-2, 2) for _ in range(r)]
        edges.append(AbelianEdge(a, b, tuple(label)))
    stars = tuple(f"s{i}" for i in range(rng.randint(1, 3)))
    return AbelianGKMGraph(r, dots, tuple(edges), stars, tuple(StarEdge(rng.choice(dots), s) for s in stars))


@timed(0)
def criterion_6():
    """Deleting stars changes no dimension (gras and 20 random graphs, d <= 5)."""
    rng = random.Random(20260)
    graphs = [load("gras")] + [_random_abelian(rng) for _ in range(20)]
    bad = [i for i, g in enumerate(graphs) if abelian_hilbert(g, 5) != abelian_hilbert(g.without_stars(), 5)]
    return not bad, f"{len(graphs)} graphs, {len(bad)} changed"


@timed(0)
def criterion_7():
    """Freeness quotients of sp22, u2 and gras."""
    cases = {
        "sp22": (nonabelian_hilbert(load("sp22"), 6), [2, 2], [1, 2, 2, 2, 1, 0, 0]),
        "u2": (nonabelian_hilbert(load("u2-hp1"), 6), [1, 2], [1, 0, 1, 0, 0, 0, 0]),
        "gras": (abelian_hilbert(load("gras"), 6), [1, 1], [1, 0, 1, 0, 0, 0, 0]),
    }
    parts, ok = [], True
    for name, (hilbert, base, expected) in cases.items():
        free, quotient = freeness_check(hilbert, base)
        ok &= free and quotient == expected
        parts.append(f"{name} {quotient}")
    return ok, ", ".join(parts)


PROPERTY_SUITE = [
    "test_rootdata.py",
    "test_abelian.py::test_restriction_matches_divisibility",
    "test_nonabelian.py::test_edge_reparametrization_invariance",
    "test_nonabelian.py::test_representative_change_invariance",
]


@timed(60.0)
def criterion_8():
    """Property suites run standalone in under a minute."""
    cmd = [sys.executable, "-m", "pytest", "-q", "-p", "no:cacheprovider", *(str(TESTS / s) for s in PROPERTY_SUITE)]
    proc = subprocess.run(cmd, capture_output=True, text=True, cwd=TESTS.parent)
    summary = proc.stdout.strip().splitlines()[-1] if proc.stdout.strip() else proc.stderr.strip()[-200:]
    return proc.returncode == 0, summary


CRITERIA = {1: criterion_1, 2: criterion_2, 3: criterion_3, 4: criterion_4,
            5: criterion_5, 6: criterion_6, 7: criterion_7, 8: criterion_8}


def report_line(n: int, ok: bool, detail: str) -> str:
    return f"criterion {n}: {'PASS' if ok else 'FAIL'}  {CRITERIA[n].__doc__}  {detail}"


@pytest.mark.parametrize("n", list(CRITERIA))
def test_criterion(n):
    ok, detail = CRITERIA[n]()
    RESULTS[n] = (ok, detail)
    print(report_line(n, ok, detail))
    assert ok, detail


def main() -> int:
    failed = 0
    for n, fn in CRITERIA.items():
        ok, detail = fn()
        failed += not ok
        print(report_line(n, ok, detail), flush=True)
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
