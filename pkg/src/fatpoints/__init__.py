"""Exact-arithmetic toolkit for linear systems through general double
points on products of projective lines, the secant varieties of their
Segre-Veronese embeddings, and checkable degeneration certificates."""

from .model import (
    DimReport,
    FatPointSpec,
    LinearSystemSpec,
    MultiDegree,
    critical_range,
    expected_dimension,
    monomial_basis,
    product_system,
    projective_system,
    virtual_dimension,
)
from .interp import (
    SecantReport,
    dim_at_specific_points,
    dim_linear_system,
    secant_dimension,
)
from .classify import Classification, classify, exception_table
from .reductions import cremona_reduce, greedy_cremona_chain, to_projective
from .degen import CertificateNode, check, plan
from .catalect import (
    catalecticant,
    catalecticant_det,
    power_coefficients,
    secant_membership_test,
)

__version__ = "0.1.0"

__all__ = [
    "Classification", "CertificateNode", "DimReport", "FatPointSpec",
    "LinearSystemSpec", "MultiDegree", "SecantReport",
    "catalecticant", "catalecticant_det", "check", "classify",
    "cremona_reduce", "critical_range", "dim_at_specific_points",
    "dim_linear_system", "exception_table", "expected_dimension",
    "greedy_cremona_chain", "monomial_basis", "plan", "power_coefficients",
    "product_system", "projective_system", "secant_dimension",
    "secant_membership_test", "to_projective", "virtual_dimension",
]
