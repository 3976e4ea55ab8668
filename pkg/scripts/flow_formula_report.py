"""Compare hand-written flow expansions against the engine.

Reuses the oracle formulas from the test suite and prints the one place
where the displayed s^2 t coefficient of the three-step word disagrees.
"""
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "tests"))

import flow_formulas as ff  # noqa: E402
from lieqr.algebra import build_algebra  # noqa: E402

for s, n in [("A", 1), ("A", 2), ("A", 3), ("D", 4)]:
    L = build_algebra(s, n)
    cases = ff.applicable(L)
    bad = [name for name, w, exp in cases if ff.compare(L, w, exp)]
    print(f"{s}{n}: {len(cases) - len(bad)}/{len(cases)} formulas agree" + (f", mismatches {bad}" if bad else ""))
    for i, j in ff.gamma2_pairs(L):
        engine, shown = ff.triple_s2t(L, i, j)
        k = L.e(j)
        if engine != shown:
            print(f"  E{i}:w, E{j}:s, F{j}:t  s^2t coefficient of E{j}: engine {engine[k]}, displayed {shown[k]}")
