"""Exact cohomology of Lie algebras and truncated algebroids over the circle.

All arithmetic is rational and exact.  The package computes Chevalley
Eilenberg cohomology of finite dimensional Lie algebras with coefficients,
Fourier-truncated cohomology of low-rank Lie algebroids over the circle,
graded tensor products of complexes, Hopf structure of the resulting
cohomology rings, and pointwise symbol complexes.
"""

from .errors import (
    AlgebroidError,
    ChainConditionError,
    DegreeOutOfRangeError,
    NonsimpleZeroError,
    NotAbelianError,
    NotStabilizedError,
    ParseError,
    ValidationError,
)
from .exactlinalg import (
    CochainComplex,
    CohomologyReport,
    RationalMatrix,
    block_matrix,
    complex_cohomology,
    kernel_basis,
    kernel_dim,
    cokernel_dim,
    rank,
    rank_modular,
)
from .liealg import (
    LieAlgebra,
    Representation,
    adjoint_representation,
    ce_complex,
    ce_differential,
    change_basis,
    check_jacobi,
    check_representation,
    euler_characteristic,
    lie_cohomology,
    trivial_representation,
)
from .circle import (
    ActionAlgebroid,
    Rank1Anchor,
    SweepResult,
    TrigPoly,
    TruncatedComplex,
    count_simple_zeros,
    is_transitive,
    stabilized_cohomology,
    trig_derivative,
    trig_mul,
    truncated_complex,
    vf_bracket,
)
from .kunneth import (
    KunnethCheck,
    ProductWithAlgebra,
    boxtimes_vector,
    direct_sum,
    kunneth_verify,
    product_with_lie_algebra,
    tensor_complex,
    tensor_rep,
)
from .hopf import (
    GradedCoalgebra,
    HopfReport,
    HStructure,
    addition,
    addition_coproduct,
    antipode_matrices,
    check_h_structure,
    exterior_structure_check,
    hopf_axioms,
    primitives,
    ts1_coalgebra,
    verify_hopf,
)
from .symbol import (
    ExactnessReport,
    FiberData,
    exactness_check,
    pullback_covector,
    symbol_complex,
)
from . import catalog, io

__all__ = [
    "AlgebroidError",
    "ChainConditionError",
    "DegreeOutOfRangeError",
    "NonsimpleZeroError",
    "NotAbelianError",
    "NotStabilizedError",
    "ParseError",
    "ValidationError",
    "CochainComplex",
    "CohomologyReport",
    "RationalMatrix",
    "block_matrix",
    "complex_cohomology",
    "kernel_basis",
    "kernel_dim",
    "cokernel_dim",
    "rank",
    "rank_modular",
    "LieAlgebra",
    "Representation",
    "adjoint_representation",
    "ce_complex",
    "ce_differential",
    "change_basis",
    "check_jacobi",
    "check_representation",
    "euler_characteristic",
    "lie_cohomology",
    "trivial_representation",
    "ActionAlgebroid",
    "Rank1Anchor",
    "SweepResult",
    "TrigPoly",
    "TruncatedComplex",
    "count_simple_zeros",
    "is_transitive",
    "stabilized_cohomology",
    "trig_derivative",
    "trig_mul",
    "truncated_complex",
    "vf_bracket",
    "KunnethCheck",
    "ProductWithAlgebra",
    "boxtimes_vector",
    "direct_sum",
    "kunneth_verify",
    "product_with_lie_algebra",
    "tensor_complex",
    "tensor_rep",
    "GradedCoalgebra",
    "HopfReport",
    "HStructure",
    "addition",
    "addition_coproduct",
    "antipode_matrices",
    "check_h_structure",
    "exterior_structure_check",
    "hopf_axioms",
    "primitives",
    "ts1_coalgebra",
    "verify_hopf",
    "ExactnessReport",
    "FiberData",
    "exactness_check",
    "pullback_covector",
    "symbol_complex",
    "catalog",
    "io",
]

__version__ = "0.1.0"
