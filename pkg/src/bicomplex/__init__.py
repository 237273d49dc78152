"""Bicomplex and hyperbolic numerics: scalars, matrices, BC^n, holomorphic
functions, the Hardy space and Schur analysis."""

from .analytic import (
    CoefficientFunction,
    DiskPoint,
    cr_residual,
    derivative,
    eval_at,
    geometric_tail_bound,
    hardy_dnorm,
    hardy_inner,
    reproduce_check,
    series_multiply,
    szego_kernel,
)
from .biquat import Biquaternion, conj_odot, hc_inner
from .errors import BicomplexError
from .matrix import (
    BCMatrix,
    PositivityReport,
    classify_hermitian,
    mat_adjoints,
    mat_det,
    mat_eigen_component,
    mat_hermitian_forcing_check,
    mat_invert,
    mat_is_hyperbolic_positive,
    mat_is_star_unitary,
    mat_join,
    mat_positive_factor,
    mat_split,
)
from .scalar import (
    E,
    E_DAG,
    BicomplexNumber,
    HyperbolicNumber,
    IdempotentPair,
    Order,
    conj_bar,
    conj_dagger,
    conj_star,
    dplus_contains,
    euclidean_norm,
    from_idempotent,
    hyperbolic_norm,
    invert,
    modulus_i2,
    modulus_j2,
    modulus_k2,
    order_compare,
    sphere_contains,
    sup_d,
    to_idempotent,
)
from .schur import (
    RealizationMatrix,
    SchurFunction,
    backward_shift_realization,
    blaschke,
    blaschke_divide,
    kernel_positivity_check,
    multiplier_contraction_check,
    realization_eval,
    schur_algorithm,
    schur_kernel_ks,
)
from .space import (
    BCOperator,
    BCVector,
    SesquilinearForm,
    functional_split,
    inner_canonical,
    inner_weighted,
    norms,
    op_adjoint,
    op_dnorm,
    polarization_eval,
    riesz_representer,
    schwarz_check,
)

__version__ = "0.1.0"
