#!/usr/bin/env python3
"""Benchmark the compiled series kernel against the pure-Python fallback.

Runs the same evaluation workload through both kernels and reports
throughput plus the speedup ratio.  The two backends execute identical
IEEE-754 operation sequences, so the result columns must agree exactly;
the benchmark re-checks that while it times.

Usage: python benchmarks/bench_backends.py [--points 4000] [--terms 24]
"""

import argparse
import time

from imbessel import _kernel_py

try:
    from imbessel import _kernel
except ImportError:
    _kernel = None


def workload(points, terms):
    cases = []
    for i in range(points):
        nu = 0.25 + 3.0 * (i % 17) / 17.0
        x = 0.05 + 4.95 * (i % 101) / 101.0
        w = (0.5 * x) * (0.5 * x)
        cases.append((i % 2, nu, w))
    return [(mod, 1.0, 0.0, nu, w, terms) for (mod, nu, w) in cases] + [
        (mod, 0.0, 1.0, nu, w, terms) for (mod, nu, w) in cases
    ]


def run(kernel, cases):
    fn = kernel.series_sums
    t0 = time.perf_counter()
    out = [fn(*case) for case in cases]
    dt = time.perf_counter() - t0
    return dt, out


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--points", type=int, default=4000)
    parser.add_argument("--terms", type=int, default=24)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    cases = workload(args.points, args.terms)
    print(f"workload: {len(cases)} series evaluations, {args.terms} terms each")

    t_py = min(run(_kernel_py, cases)[0] for _ in range(args.repeat))
    _, out_py = run(_kernel_py, cases)
    print(f"python   kernel: {t_py * 1e3:9.2f} ms   {len(cases) / t_py:12.0f} evals/s")

    if _kernel is None:
        print("compiled kernel: not built (pip install -e . compiles it)")
        return

    t_c = min(run(_kernel, cases)[0] for _ in range(args.repeat))
    _, out_c = run(_kernel, cases)
    print(f"compiled kernel: {t_c * 1e3:9.2f} ms   {len(cases) / t_c:12.0f} evals/s")
    print(f"speedup: {t_py / t_c:.1f}x")

    mismatches = sum(1 for a, b in zip(out_py, out_c) if a != b)
    print(f"bit-identical results: {'yes' if mismatches == 0 else f'NO ({mismatches} rows differ)'}")


if __name__ == "__main__":
    main()
