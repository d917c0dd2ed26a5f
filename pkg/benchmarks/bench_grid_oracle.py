"""Time the grid oracle with the numba kernels against the pure-numpy fallback.

Run: python3 benchmarks/bench_grid_oracle.py [--instances N]

The backend is chosen at import time from ROUNDSLEEK_PURE_NUMPY, so each
backend runs in its own subprocess.  Both must return identical verdicts.
"""
from __future__ import annotations

import argparse
import json
import os
import subprocess
import sys

CHILD = r"""
import json, random, sys, time
from roundsleek import _kernels
from roundsleek.intervals import random_interval_union
from roundsleek.oracle import grid_oracle

n = int(sys.argv[1])
rng = random.Random(2024)
unions = [random_interval_union(rng) for _ in range(n)]
grid_oracle(unions[0])  # compile outside the timed loop
t0 = time.perf_counter()
verdicts = [(v.round, v.sleek) for v in map(grid_oracle, unions)]
elapsed = time.perf_counter() - t0
print(json.dumps({"numba": _kernels.HAVE_NUMBA and not _kernels.PURE_NUMPY, "seconds": elapsed, "verdicts": verdicts}))
"""


def run(pure: bool, n: int) -> dict:
    env = dict(os.environ, ROUNDSLEEK_PURE_NUMPY="1" if pure else "0")
    out = subprocess.run([sys.executable, "-c", CHILD, str(n)], env=env, capture_output=True, text=True, check=True)
    return json.loads(out.stdout)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--instances", type=int, default=200)
    args = ap.parse_args()

    fast = run(False, args.instances)
    slow = run(True, args.instances)
    if fast["verdicts"] != slow["verdicts"]:
        sys.exit("backends disagree")
    print(f"instances      {args.instances}")
    print(f"numba kernels  {fast['seconds']:.3f} s  (active: {fast['numba']})")
    print(f"pure numpy     {slow['seconds']:.3f} s")
    print(f"speedup        {slow['seconds'] / fast['seconds']:.2f}x")


if __name__ == "__main__":
    main()
