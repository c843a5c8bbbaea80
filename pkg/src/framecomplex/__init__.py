"""Exact computations with vector-valued differential forms on finite-order frame bundles."""

from .errors import DomainError, ParseError, VerificationError
from .multiindex import MultiIndex, enumerate_multiindices
from .symexpr import JetCoordinate, PolyExpr, coord
from .geometry import BundleContext, dimension, intrinsic_order, projectable_to
from .forms import ScalarForm, VectorForm, component, d, normalize_bar, wedge
from .calculus import (
    TangentField,
    S_op,
    contract_total,
    dT,
    delta_apply,
    iT,
    total_derivative,
    vertical_endo,
    vertical_endo_field,
)
from .homotopy import P_coeff, P_op, P_scalar, canonical_rep, homotopy_residual, poincare, split_dT_d
from .variational import (
    Lagrangian,
    euler_lagrange,
    fundamental_form,
    helmholtz,
    hilbert,
    hilbert_comparison,
    is_homogeneous,
)

__all__ = [
    "DomainError",
    "ParseError",
    "VerificationError",
    "MultiIndex",
    "enumerate_multiindices",
    "JetCoordinate",
    "PolyExpr",
    "coord",
    "BundleContext",
    "dimension",
    "intrinsic_order",
    "projectable_to",
    "ScalarForm",
    "VectorForm",
    "component",
    "d",
    "normalize_bar",
    "wedge",
    "TangentField",
    "S_op",
    "contract_total",
    "dT",
    "delta_apply",
    "iT",
    "total_derivative",
    "vertical_endo",
    "vertical_endo_field",
    "P_coeff",
    "P_op",
    "P_scalar",
    "canonical_rep",
    "homotopy_residual",
    "poincare",
    "split_dT_d",
    "Lagrangian",
    "euler_lagrange",
    "fundamental_form",
    "helmholtz",
    "hilbert",
    "hilbert_comparison",
    "is_homogeneous",
]

__version__ = "0.1.0"
