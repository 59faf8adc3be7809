"""Toeplitz and Hankel product decompositions of square complex matrices.

A generic n-by-n complex matrix is a product of floor(n/2) + 1 Toeplitz
matrices (equally, Hankel matrices), and that count is the smallest
possible; allowing 2n Toeplitz factors interleaved with n permutations,
a decomposition can be computed directly by Gaussian elimination in
O(n^3) time. This package implements both routes with executable
certificates for the rank and impossibility statements behind them.
"""

from .errors import (
    ConvergenceError,
    FormatError,
    NonGenericMatrixError,
    SingularFactorError,
    ToepfactError,
)
from .structmat import (
    FactorChain,
    HankelSpec,
    PermutationSpec,
    ToeplitzSpec,
    as_square_matrix,
    dense_product,
    densify,
    factor_tag,
    hankel_from_dense,
    relative_residual,
    shift_basis,
    toeplitz_from_dense,
)
from .operators import (
    apply_operator,
    exchange_matrix,
    exchange_permutation,
    hankel_from_toeplitz,
)
from .fastmul import toeplitz_matvec, upper_toeplitz_inverse
from .generate import MATRIX_KINDS, complex_normal, generate_matrix
from .gedecomp import (
    ElementaryColumnFactor,
    RecenteredFactor,
    TriangularSplit,
    elementary_column_factorize,
    hankel_permutation_decompose,
    recenter,
    toeplitz_permutation_decompose,
    triangular_split,
)
from .minimal import (
    DecompositionResult,
    GaussNewtonConfig,
    JacobianMatrix,
    RankCertificate,
    ToeplitzTuple,
    certificate_tuple,
    closed_form_2x2,
    gauss_newton_decompose,
    gauss_newton_hankel_decompose,
    minimal_factor_count,
    product_jacobian,
    rank_certificate,
    tuple_product,
)
from .segre import (
    LinearQuadraticSystem,
    build_linear_quadratic_system,
    export_system,
    linear_values,
    quadratic_values,
    rank_one_coordinates,
    variable_index,
)
from .guards import (
    CirculantObstruction,
    StructureReport,
    circulant_obstruction,
    decomposability_screen,
    is_centrosymmetric,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
