"""Compiled vs numpy kernels on the three hot loops.

    python benchmarks/bench_kernels.py [--repeat 3]

Prints one JSON line per (kernel, size) with the best wall-clock of each backend.
"""

import argparse
import json
import time

import numpy as np

from jrpirp import kernels
from jrpirp.generate import GenSpec, generate_instance
from jrpirp.lp import solve_lp
from jrpirp.oracle import exact_opt, search_size


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - start)
    return min(times), out


def held_karp_cases():
    rng = np.random.default_rng(0)
    for n in (8, 10, 12):
        pts = rng.random((n + 1, 2))
        dist = np.sqrt(((pts[:, None] - pts[None]) ** 2).sum(-1))
        yield f"held_karp n={n}", lambda b, d=dist: kernels.held_karp_tours(d, backend=b)


def enumeration_cases():
    for t in (4, 5):
        spec = GenSpec(seed=1, family="jrp_table", n=(3, 3), t=(t, t), density=1.0)
        inst = generate_instance(spec)
        yield f"enumerate search={search_size(inst)}", lambda b, i=inst: exact_opt(i, backend=b).value


def simplex_cases():
    for t in (16, 32):
        spec = GenSpec(seed=2, family="jrp_additive", n=(6, 6), t=(t, t), density=0.6)
        inst = generate_instance(spec)

        def run(b, i=inst):
            impl = kernels._impl
            kernels._impl = kernels._pick(b)
            try:
                return solve_lp(i).objective
            finally:
                kernels._impl = impl

        yield f"lp_pivots N=6 T={t}", run


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)
    if kernels.BACKEND != "cython":
        print(json.dumps({"error": "compiled extension not available"}))
        return 1
    for cases in (held_karp_cases, enumeration_cases, simplex_cases):
        for name, fn in cases():
            tc, rc = best_of(lambda: fn("cython"), args.repeat)
            tp, rp = best_of(lambda: fn("python"), args.repeat)
            agree = bool(np.allclose(rc, rp, rtol=1e-9, atol=1e-9))
            print(json.dumps({"case": name, "cython_s": round(tc, 6), "python_s": round(tp, 6),
                              "speedup": round(tp / tc, 2) if tc > 0 else None, "agree": agree}))
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
