from .families import (
    FIXTURES,
    AdjointFamily,
    CircleFamily,
    DuplicateFamily,
    FunctionFamily,
    LinearImage,
    MonomialFamily,
    ProductFamily,
    adjoint_family,
    product_family,
)
from .certify import (
    SamplerConfig,
    SamplerExhausted,
    describe_null,
    evaluate_rows,
    linear_dimension,
    pair_index,
    pair_labels,
    quadratic_dimension,
)
from .prover import ProverReport, build_schedule, coefficient_prover, format_identity
