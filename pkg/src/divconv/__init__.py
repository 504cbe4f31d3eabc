"""Exact evaluation of divisor-sum convolution identities via eta-quotient
cusp bases and Eisenstein series, with brute-force oracles throughout."""

from .arith import Rational, sigma, sigma_at, sigma_table
from .convolution import (
    ConvolutionFormula,
    brute_force_W,
    derive_convolution_formula,
    evaluate_formula,
    target_series,
    verify_formula,
)
from .eta import (
    EtaQuotient,
    check_admissibility,
    euler_F,
    expand_eta_quotient,
    search_eta_quotients,
)
from .modforms import (
    Basis,
    BasisElement,
    build_basis,
    dim_E4,
    dim_S4,
    eisenstein_L,
    eisenstein_M,
    express_in_basis,
    rank,
    standard_basis,
)
from .qseries import QSeries
from .representations import (
    octonary_convolution,
    octonary_formula,
    r4,
    r4_lattice,
)

__all__ = [
    "Basis",
    "BasisElement",
    "ConvolutionFormula",
    "EtaQuotient",
    "QSeries",
    "Rational",
    "brute_force_W",
    "build_basis",
    "check_admissibility",
    "derive_convolution_formula",
    "dim_E4",
    "dim_S4",
    "eisenstein_L",
    "eisenstein_M",
    "euler_F",
    "evaluate_formula",
    "expand_eta_quotient",
    "express_in_basis",
    "octonary_convolution",
    "octonary_formula",
    "r4",
    "r4_lattice",
    "rank",
    "search_eta_quotients",
    "sigma",
    "sigma_at",
    "sigma_table",
    "standard_basis",
    "target_series",
    "verify_formula",
]
