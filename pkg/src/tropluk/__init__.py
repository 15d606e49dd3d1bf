"""Exact max-plus and max-Lukasiewicz linear algebra.

Library indices are 0-based; the command line prints 1-based nodes.
"""

from .eigen import (
    EigReport,
    KLGenerators,
    background_greatest,
    full_eigenspace,
    is_luk_eigenvector,
    kl_generators,
    pure_generators,
    schur_complement,
)
from .errors import (
    DimensionError,
    DivergentValue,
    DomainError,
    NoEigenvectorsError,
    NormalizationError,
    NoSolutionError,
    PositiveCycleError,
    PreconditionError,
    TransientCapExceeded,
    TroplukError,
)
from .linalg import (
    TropMatrix,
    TropVector,
    cg_inverse,
    luk_mat_mul,
    luk_mat_vec,
    mat_add,
    mat_mul,
    mat_mul_dual,
    mat_power,
    mat_vec,
    mat_vec_dual,
    residual_greatest_solution,
    shift,
)
from .partitions import (
    Partition,
    SecurityVerdict,
    enumerate_secure_partitions,
    is_lambda_secure,
    is_secure_partition,
    least_secure_partition,
    secure_nodes,
)
from .powers import (
    PeriodReport,
    attraction_membership,
    luk_orbit,
    luk_power,
    matrix_of_ones,
    orbit_period,
    power_period,
)
from .scalar import BOTTOM, TOP, format_scalar, to_scalar
from .spectral import (
    bellman_solve,
    critical_structure,
    csr_decompose,
    eigencone,
    kleene_star,
    longest_walk_closure,
    max_cycle_mean,
)
from .tconvex import hull_membership, minimal_generators, trop_convex_combine

__version__ = "0.1.0"
