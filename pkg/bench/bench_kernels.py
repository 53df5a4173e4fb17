#!/usr/bin/env python3
"""Compare the compiled rank kernels against the pure-Python fallback.

Runs exact and modular rank over every nonzero boundary matrix of
FullCyclic(n) for the requested sizes and prints one line per kernel.
The pure kernels get slow past n = 7; use --pure-max to cap how far
they are asked to go.
"""

import argparse
import sys
import time

from colorcomplex import ComplexSpec, build_complex, intmatrix


def boundary_matrices(n):
    cx = build_complex(ComplexSpec.full_cyclic(n))
    return [m for m in (cx.boundary_matrix(r) for r in cx.degrees()) if m.nnz]


def timed(mats, fn):
    t0 = time.perf_counter()
    ranks = [fn(m) for m in mats]
    return time.perf_counter() - t0, ranks


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, action="append",
                    help="FullCyclic size to time (repeatable; default 6 7)")
    ap.add_argument("--prime", type=int, default=1073741789,
                    help="modulus for the modular kernels")
    ap.add_argument("--pure-max", type=int, default=7,
                    help="largest n the pure kernels run at (default 7)")
    args = ap.parse_args(argv)
    sizes = args.n or [6, 7]

    if "compiled" not in intmatrix.available_backends():
        print("compiled backend unavailable; nothing to compare", file=sys.stderr)
        return 1

    header = f"{'n':>2}  {'mats':>4}  {'kernel':<8}  {'compiled':>9}  {'pure':>9}  {'speedup':>7}"
    print(header)
    print("-" * len(header))
    for n in sizes:
        mats = boundary_matrices(n)
        jobs = [
            ("exact", lambda m, b: intmatrix.rank_exact(m, backend=b)),
            ("mod p", lambda m, b: intmatrix.rank_mod_p(m, args.prime, backend=b)),
        ]
        for name, fn in jobs:
            ct, cranks = timed(mats, lambda m: fn(m, "compiled"))
            if n <= args.pure_max:
                pt, pranks = timed(mats, lambda m: fn(m, "pure"))
                if cranks != pranks:
                    print(f"MISMATCH at n={n} {name}: {cranks} vs {pranks}",
                          file=sys.stderr)
                    return 1
                pure = f"{pt:8.2f}s"
                speedup = f"{pt / ct:6.1f}x"
            else:
                pure = f"{'-':>9}"
                speedup = f"{'-':>7}"
            print(f"{n:>2}  {len(mats):>4}  {name:<8}  {ct:8.2f}s  {pure}  {speedup}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
