"""Geometric Poincare series of multi-index filtrations defined by point
blow-ups of (C^2, 0), for locally free sheaves given by rank and Chern numbers."""
from .eulerlib import (
    SheafSpec,
    chi_divisor_quotient,
    chi_line_quotient,
    gen_binom,
    h0_dim_quotient,
    psi,
    sym_power_chi,
)
from .mseries import DimensionMismatch, MultiSeries, ZeroStep, binom_expand, monomial, mul, regular_part
from .poincare import (
    CostCapExceeded,
    SeriesJob,
    chi_series,
    dg_series,
    geom_coeff_at,
    geom_series_closed,
    geom_series_def,
    geom_series_laurent,
    h0_series_O,
    lemma9_check,
    lemma10_check,
    omega1_spec,
)
from .resolution import (
    Free,
    InvalidCenter,
    NonIntegralInverse,
    Origin,
    ResolutionGraph,
    Satellite,
    SingularMatrix,
    build_graph,
    contacts_m,
    enumerate_sequences,
    mu_of_subset,
    multiplicity_matrix,
)

__version__ = "0.1.0"
