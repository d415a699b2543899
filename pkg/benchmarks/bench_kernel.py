#!/usr/bin/env python3
"""Compare the compiled and pure-Python enumeration kernels.

Each row times one full class scan (the ``g0`` fiber, the largest search
space) and checks that both backends return the same survivors.

    python benchmarks/bench_kernel.py [--repeat 3] [--quick]
"""

from __future__ import annotations

import argparse
import time

from lame_census.constellation import _plan
from lame_census.kernel import BACKENDS, get_scan
from lame_census.perm import canonical_sigma_inf
from lame_census.ramification import build_profile

WORKLOADS = [
    ("Ic", 1, 8),
    ("Ic", 1, 10),
    ("Ia", 1, 12),
    ("Ic", 2, 6),
    ("Ic", 3, 4),
    ("Ia", 4, 3),
]
QUICK = WORKLOADS[:3]


def time_scan(backend, profile, fiber, repeat):
    role, pre = _plan(profile, "right", fiber)
    if role == "g0":
        parts, target = profile.type_over_0.parts, profile.type_over_1.parts
    else:
        parts, target = profile.type_over_1.parts, profile.type_over_0.parts
    ginf = canonical_sigma_inf(profile.type_over_inf)
    scan = get_scan(backend)
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        found = scan(parts, ginf, target, pre)
        best = min(best, time.perf_counter() - t0)
    return best, found


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--quick", action="store_true", help="only the small workloads")
    parser.add_argument("--fiber", choices=("0", "1", "auto"), default="0")
    args = parser.parse_args()

    if "cython" not in BACKENDS:
        print("compiled kernel not built; only the python backend is available")
    header = f"{'profile':<10} {'deg':>3} {'survivors':>9}" + "".join(f" {b + ' [s]':>12}" for b in BACKENDS)
    if len(BACKENDS) == 2:
        header += f" {'speedup':>8}"
    print(header)
    for case, n, N in QUICK if args.quick else WORKLOADS:
        profile = build_profile(case, n, N)
        times = {}
        results = {}
        for backend in BACKENDS:
            times[backend], results[backend] = time_scan(backend, profile, args.fiber, args.repeat)
        if len({tuple(r) for r in results.values()}) != 1:
            raise SystemExit(f"backends disagree on {case}({n},{N})")
        line = f"{case}({n},{N}):".ljust(10) + f" {n * N:>3} {len(results[BACKENDS[0]]):>9}"
        line += "".join(f" {times[b]:>12.3f}" for b in BACKENDS)
        if len(BACKENDS) == 2:
            line += f" {times['python'] / times['cython']:>7.1f}x"
        print(line)


if __name__ == "__main__":
    main()
