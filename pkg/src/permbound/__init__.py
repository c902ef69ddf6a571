"""Exact permanents, hafnians, their tensor generalizations, and a family
of subset-average upper bounds with verification suites."""

from .bounds import (
    F_ell_level,
    F_level,
    G_ell_level,
    G_level,
    baseline_ckp_minor,
    baseline_hadamard,
    baseline_haf_per,
    baseline_krauter,
    baseline_opnorm,
    baseline_singular,
    composition_bound_F,
    composition_bound_F_ell,
    f_ell_set,
    f_set,
    f_tilde,
    hafnian_bound,
    hyperhafnian_bound,
    minor_sum_phi,
    multidim_permanent_bound,
    partition_bound_f,
    partition_bound_f_ell,
    permanent_bound_composition,
    permanent_bound_partition,
    phi_bound,
    psi_bounds,
    real_rank,
    singular_values,
    spectral_norm,
    subhafnian_sum_psi,
    unit_circle_avg_bound,
    unit_circle_pair_bound,
    unit_circle_theta_bound,
)
from .charfn import (
    DiagonalSumModel,
    Distribution,
    avg_bound_charfn,
    bernoulli,
    exact_charfn,
    monte_carlo_charfn,
    normal,
    pair_bound_charfn,
    point_mass,
    uniform,
)
from .convolution import (
    SetFunction,
    classify_equality,
    generalized_R,
    subset_convolution,
    verify_convolution_inequality,
    verify_master_inequality,
    verify_multi_inequality,
)
from .errors import DomainError, FeasibilityError, NumericError, ParseError
from .exact import (
    block_embed_per_as_haf,
    hafnian,
    hyperhafnian,
    hyperhafnian_via_expansion,
    multidim_permanent,
    multidim_permanent_via_laplace,
    permanent,
    permanent_D,
    permanent_minor,
    permanent_via_laplace,
)
from .matrixio import (
    BoundRow,
    MatrixInput,
    display_round_up,
    load_matrix,
    load_tensor,
    round_up_6dp,
)
from .table1 import reproduce as reproduce_table1
from .verify import SUITES, SuiteResult, run_suite

__version__ = "0.1.0"

__all__ = [
    "BoundRow",
    "DiagonalSumModel",
    "Distribution",
    "DomainError",
    "F_ell_level",
    "F_level",
    "FeasibilityError",
    "G_ell_level",
    "G_level",
    "MatrixInput",
    "NumericError",
    "ParseError",
    "SUITES",
    "SetFunction",
    "SuiteResult",
    "avg_bound_charfn",
    "baseline_ckp_minor",
    "baseline_hadamard",
    "baseline_haf_per",
    "baseline_krauter",
    "baseline_opnorm",
    "baseline_singular",
    "bernoulli",
    "block_embed_per_as_haf",
    "classify_equality",
    "composition_bound_F",
    "composition_bound_F_ell",
    "display_round_up",
    "exact_charfn",
    "f_ell_set",
    "f_set",
    "f_tilde",
    "generalized_R",
    "hafnian",
    "hafnian_bound",
    "hyperhafnian",
    "hyperhafnian_bound",
    "hyperhafnian_via_expansion",
    "load_matrix",
    "load_tensor",
    "minor_sum_phi",
    "monte_carlo_charfn",
    "multidim_permanent",
    "multidim_permanent_bound",
    "multidim_permanent_via_laplace",
    "normal",
    "pair_bound_charfn",
    "partition_bound_f",
    "partition_bound_f_ell",
    "permanent",
    "permanent_D",
    "permanent_minor",
    "permanent_bound_composition",
    "permanent_bound_partition",
    "permanent_via_laplace",
    "phi_bound",
    "point_mass",
    "psi_bounds",
    "real_rank",
    "reproduce_table1",
    "round_up_6dp",
    "run_suite",
    "singular_values",
    "spectral_norm",
    "subhafnian_sum_psi",
    "subset_convolution",
    "uniform",
    "unit_circle_avg_bound",
    "unit_circle_pair_bound",
    "unit_circle_theta_bound",
    "verify_convolution_inequality",
    "verify_master_inequality",
    "verify_multi_inequality",
]
