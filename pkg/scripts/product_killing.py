"""Show that product families lose one quadratic dimension per extra factor.

Every factor's Killing form is constant on its adjoint orbit, so the
normalised forms of two factors differ by a quadratic relation.
"""
from lieqr.algebra import build_algebra
from lieqr.quadind import adjoint_family, describe_null, pair_labels, product_family, quadratic_dimension

for spec in (["A1", "A1"], ["A1", "A2"], ["A1", "A1", "A1"], ["A2", "A2"]):
    Ls = [build_algebra(x[0], int(x[1:])) for x in spec]
    fam = product_family([adjoint_family(L) for L in Ls])
    cert = quadratic_dimension(fam)
    m = fam.dim
    print(f"{'x'.join(spec)}: m={m} rank {cert.rank} of {m * (m + 1) // 2} "
          f"(deficit {m * (m + 1) // 2 - cert.rank}, factors-1 = {len(spec) - 1})")
    if cert.candidate_null and len(spec) == 2:
        labels = [f"{s}.{k + 1}:{lab}" for k, (s, L) in enumerate(zip(spec, Ls)) for lab in L.labels]
        print("  null:", describe_null(cert.candidate_null, pair_labels(labels)))
