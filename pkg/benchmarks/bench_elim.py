"""Compare the compiled and pure-Python elimination kernels.

    python3 benchmarks/bench_elim.py [--repeat 5] [--seed 0]

Random integer systems of several shapes, plus the constraint matrices the
solvers actually build for the G2 orbit graph, are reduced by both kernels.
Results are checked for agreement before timings are printed.
"""
from __future__ import annotations

import argparse
import random
import timeit

from gkm import _elim_py
from gkm.abelian import _edge_rows
from gkm.exact import _integer_rows
from gkm.fixtures import g2_k6_graph, sp2_flag_graph

try:
    from gkm import _elim_ext
except ImportError:  # pragma: no cover
    _elim_ext = None


def random_matrix(rng: random.Random, rows: int, cols: int, bound: int, density: float) -> list[list[int]]:
    return [[rng.randint(-bound, bound) if rng.random() < density else 0 for _ in range(cols)]
            for _ in range(rows)]


def workloads(seed: int):
    rng = random.Random(seed)
    yield "dense 20x20, |a| <= 9", random_matrix(rng, 20, 20, 9, 1.0), 20
    yield "dense 40x60, |a| <= 3", random_matrix(rng, 40, 60, 3, 1.0), 60
    yield "sparse 120x150, 5%", random_matrix(rng, 120, 150, 2, 0.05), 150
    yield "dense 12x12, |a| <= 2^40", random_matrix(rng, 12, 12, 2 ** 40, 1.0), 12
    for name, graph, d in (("B2 flag", sp2_flag_graph(), 5), ("G2 orbit", g2_k6_graph(), 6)):
        rows = _edge_rows(graph, d)
        ncols = len(rows[0])
        yield f"{name} edge system, d={d} ({len(rows)}x{ncols})", _integer_rows(rows), ncols


def bench(fn, m, ncols, repeat):
    return min(timeit.repeat(lambda: fn([r[:] for r in m], ncols), number=1, repeat=repeat))


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    if _elim_ext is None:
        raise SystemExit("compiled kernel not built; run `pip install -e . --no-build-isolation` first")
    print(f"{'workload':<44} {'python':>10} {'compiled':>10} {'speedup':>8}")
    for name, m, ncols in workloads(args.seed):
        a, b = _elim_py.rref([r[:] for r in m], ncols), _elim_ext.rref([r[:] for r in m], ncols)
        assert a == b, f"kernels disagree on {name}"
        tp = bench(_elim_py.rref, m, ncols, args.repeat)
        tc = bench(_elim_ext.rref, m, ncols, args.repeat)
        print(f"{name:<44} {tp * 1e3:>8.2f}ms {tc * 1e3:>8.2f}ms {tp / tc:>7.1f}x")


if __name__ == "__main__":
    main()
