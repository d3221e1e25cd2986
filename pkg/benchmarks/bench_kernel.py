"""Benchmark the compiled coefficient kernel against the pure-Python fallback.

The kernel selection happens at import time, so each backend is timed in its
own child process (SKEINCALC_PURE=1 forces the fallback).  Workloads:

  * raw:       repeated power-basis products of random ring elements;
  * satellite: the multinomial satellite sum at p = 11 and 13 (the hot
               production path behind `skeincalc valuation`).

Run:  python benchmarks/bench_kernel.py
"""

from __future__ import annotations

import argparse
import json
import os
import random
import subprocess
import sys
import time


def run_child(args) -> dict:
    from skeincalc._backend import BACKEND
    from skeincalc.cyclotomic import CycInt, euler_phi, ring_modulus
    from skeincalc.invariants import HopfSatellite, bracket_satellite
    from skeincalc.skein import omega

    rng = random.Random(args.seed)
    results = {"backend": BACKEND}

    N = ring_modulus(args.p)
    phi = euler_phi(N)
    elems = [CycInt(N, [rng.randint(-10 ** 6, 10 ** 6) for _ in range(phi)])
             for _ in range(64)]
    t0 = time.perf_counter()
    acc = elems[0]
    for _ in range(args.raw_iters):
        for e in elems:
            acc = acc * e
        # keep coefficient growth bounded so the timing stays comparable
        acc = CycInt(N, [c % (10 ** 12) for c in acc.coeffs])
    results["raw_seconds"] = time.perf_counter() - t0
    results["raw_products"] = args.raw_iters * len(elems)

    sat_times = {}
    for p in args.sat_primes:
        t0 = time.perf_counter()
        bracket_satellite(HopfSatellite(p, omega(p), omega(p)))
        sat_times[p] = time.perf_counter() - t0
    results["satellite_seconds"] = sat_times
    return results


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--p", type=int, default=11, help="prime for the raw workload")
    parser.add_argument("--raw-iters", type=int, default=200)
    parser.add_argument("--sat-primes", type=int, nargs="*", default=[11, 13])
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--child", action="store_true", help=argparse.SUPPRESS)
    args = parser.parse_args()

    if args.child:
        print(json.dumps(run_child(args)))
        return 0

    reports = {}
    for name, env_extra in (("cython", {}), ("python", {"SKEINCALC_PURE": "1"})):
        env = dict(os.environ, **env_extra)
        if not env_extra:
            env.pop("SKEINCALC_PURE", None)
        cmd = [sys.executable, os.path.abspath(__file__), "--child",
               "--p", str(args.p), "--raw-iters", str(args.raw_iters),
               "--seed", str(args.seed), "--sat-primes",
               *map(str, args.sat_primes)]
        out = subprocess.run(cmd, env=env, capture_output=True, text=True, check=True)
        reports[name] = json.loads(out.stdout)

    compiled = reports["cython"]
    pure = reports["python"]
    if compiled["backend"] == pure["backend"]:
        print("note: compiled kernel unavailable; both runs used the "
              f"{compiled['backend']} backend")
    print(f"raw products ({compiled['raw_products']} big-int ring muls):")
    for name, rep in reports.items():
        print(f"  {rep['backend']:>7}: {rep['raw_seconds']:8.3f} s")
    if pure["raw_seconds"] and compiled["raw_seconds"]:
        print(f"  speedup: {pure['raw_seconds'] / compiled['raw_seconds']:.2f}x")
    print("satellite bracket (multinomial sum):")
    for p in args.sat_primes:
        c = compiled["satellite_seconds"][str(p)]
        q = pure["satellite_seconds"][str(p)]
        print(f"  p={p:>2}: {compiled['backend']} {c:7.3f} s   "
              f"{pure['backend']} {q:7.3f} s   speedup {q / c:.2f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
