"""Certify linear and quadratic independence for the desk-sized algebras.

    python3 scripts/certify_all.py [--seed N] [--with-e6]
"""
import argparse
import time

from lieqr.algebra import build_algebra
from lieqr.quadind import SamplerConfig, adjoint_family, linear_dimension, quadratic_dimension

ap = argparse.ArgumentParser()
ap.add_argument("--seed", type=int, default=1)
ap.add_argument("--with-e6", action="store_true")
args = ap.parse_args()

cases = [("A", 1), ("A", 2), ("A", 3), ("A", 4), ("D", 4), ("D", 5)]
if args.with_e6:
    cases.append(("E", 6))

cfg = SamplerConfig(seed=args.seed)
print(f"{'alg':>4} {'dim':>4} {'linear':>8} {'quadratic':>12} {'seconds':>8}")
for s, n in cases:
    fam = adjoint_family(build_algebra(s, n))
    t0 = time.perf_counter()
    lin = linear_dimension(fam, cfg)
    quad = quadratic_dimension(fam, cfg)
    dt = time.perf_counter() - t0
    print(f"{s}{n:<3} {fam.dim:>4} {lin.rank:>4}/{lin.target:<4}"
          f"{quad.rank:>6}/{quad.target:<6}{dt:>7.1f}  {quad.verdict}")
