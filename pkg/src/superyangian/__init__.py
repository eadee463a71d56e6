"""Exact symbolic computation and verification for the super Yangian
Y_{m|n} and the current superalgebra gl_{m|n}[x] over F_p."""

from .central import (
    a_series,
    b_series,
    bc_series,
    berezinian,
    build_catalog,
    enumerate_generators,
    s_series,
)
from .core import AlgebraContext, Element, generator, loop_degree, supercommutator
from .current import (
    CurrentContext,
    current_bracket,
    invariant_dimension,
    p_center_gen,
    p_map,
    top_graded,
    z_element,
)
from .gauss import GaussData, gauss_decompose, quasideterminant
from .maps import eta_c, mu_f, omega, permutation, phi_k, psi_k, rho, zeta
from .series import USeries, UVSeries
from .verify import (
    CheckReport,
    Workspace,
    run_suite,
    verify_central,
    verify_drinfeld_presentation,
    verify_graded,
    verify_identity,
    verify_independence,
    verify_pbw_counts,
    verify_rtt_consistency,
    verify_sy_presentation,
)

__version__ = "0.1.0"
