from __future__ import annotations

import os
import random
import subprocess
import sys
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gkm import _elim_py, exact

ext = pytest.importorskip("gkm._elim_ext", reason="compiled kernel not built")


def fraction_rref(rows, ncols):
    """Textbook Gauss-Jordan over Fraction, normalised to pivot 1."""
    m = [[Fraction(x) for x in r] for r in rows]
    pivots, r = [], 0
    for c in range(ncols):
        p = next((i for i in range(r, len(m)) if m[i][c]), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        m[r] = [x / m[r][c] for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    return m[:r], pivots


def normalised(rows, pivots):
    return [[Fraction(x, row[p]) for x in row] for row, p in zip(rows, pivots)]


SCALES = {"small": 9, "medium": 2 ** 24, "big": 2 ** 70}


@st.composite
def int_matrices(draw, scale="small"):
    r, c = draw(st.integers(0, 7)), draw(st.integers(1, 7))
    bound = SCALES[scale]
    entries = st.integers(-bound, bound)
    return [draw(st.lists(entries, min_size=c, max_size=c)) for _ in range(r)], c


def test_backend_reported():
    assert exact.BACKEND in ("compiled", "python")


@settings(max_examples=300)
@given(st.one_of(*(int_matrices(s) for s in SCALES)))
def test_kernels_agree_with_fraction_elimination(mc):
    m, c = mc
    expected, piv = fraction_rref(m, c)
    for kernel in (_elim_py.rref, ext.rref):
        rows, pivots = kernel([list(r) for r in m], c)
        assert pivots == piv
        assert normalised(rows, pivots) == expected
        # fraction-free: all pivots share one value
        assert len({row[p] for row, p in zip(rows, pivots)}) <= 1


def test_overflow_falls_back_to_exact_path():
    m = [[2 ** 40 + 1, 3], [5, 2 ** 40 - 7], [2 ** 39, 2 ** 41]]
    a, pa = ext.rref([r[:] for r in m], 2)
    b, pb = _elim_py.rref([r[:] for r in m], 2)
    assert pa == pb and normalised(a, pa) == normalised(b, pb)


def test_overflow_mid_elimination_resumes_exactly():
    # small first pivot, then products that exceed int64 a few steps in
    rng = random.Random(7)
    for _ in range(200):
        n = rng.randint(3, 8)
        m = [[rng.randint(-2 ** 24, 2 ** 24) for _ in range(n + 1)] for _ in range(n)]
        m[0][0] = 1
        expected, piv = fraction_rref(m, n + 1)
        rows, pivots = ext.rref(m, n + 1)
        assert pivots == piv and normalised(rows, pivots) == expected


def test_leading_zero_columns():
    rows, pivots = ext.rref([[0, 0, 2, 4]], 4)
    assert pivots == [2] and normalised(rows, pivots) == [[0, 0, 1, 2]]


@pytest.mark.parametrize("env, expected", [({}, "compiled"), ({"GKM_PURE_PYTHON": "1"}, "python")])
def test_backend_selection(env, expected, monkeypatch):
    monkeypatch.delenv("GKM_PURE_PYTHON", raising=False)
    code = "import gkm.exact as e; print(e.BACKEND)"
    out = subprocess.run([sys.executable, "-c", code], env={**os.environ, **env},
                         capture_output=True, text=True, check=True).stdout.strip()
    assert out == expected
