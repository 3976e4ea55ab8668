"""Long run: quadratic certificate for E6 (3081 pair columns).

Takes tens of minutes without python-flint; with it, a few minutes.
"""
import sys
import time

from lieqr.algebra import build_algebra
from lieqr.quadind import SamplerConfig, adjoint_family, quadratic_dimension

seed = int(sys.argv[1]) if len(sys.argv) > 1 else 1
fam = adjoint_family(build_algebra("E", 6))
t0 = time.perf_counter()
cert = quadratic_dimension(fam, SamplerConfig(seed=seed))
print(f"E6: rank {cert.rank}/{cert.target} prime {cert.prime} samples {cert.samples} "
      f"{cert.verdict} in {time.perf_counter() - t0:.0f}s")
