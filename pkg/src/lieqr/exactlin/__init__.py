from .poly import MultiPoly, PolyDomain, PolyRing, RingMismatch, UnknownVariable
from .linalg import (
    CERTIFIED,
    DEFICIENT,
    GF,
    QQ,
    BadPrime,
    PrimeRetriesExceeded,
    RankCertificate,
    nullspace_exact,
    nullspace_modular,
    pivot_rows_mod,
    choose_backend,
    prime_sequence,
    primitive_integer_vector,
    rank_exact,
    rank_mod_array,
    rank_modular,
    rational_reconstruction,
    reduce_matrix,
)


def poly_coefficient(p: MultiPoly, monomial):
    """Coefficient of ``monomial`` (name->exponent dict or exponent tuple) in ``p``."""
    return p.coefficient(monomial)
