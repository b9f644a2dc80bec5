"""Exact average norms of polynomials with coefficients in a finite complex set."""

from .exactnum import (
    GaussianRational,
    Rational,
    binomial,
    format_gaussian,
    format_rational,
    multinomial,
    parse_gaussian,
    rational,
)
from .ensemble import (
    AverageKey,
    AverageValue,
    CoefficientSet,
    EnumerationBudgetError,
    oracle_e,
    oracle_mu,
    parse_coefficient_set,
)
from .laurent import LaurentPoly, norm_power
from .recursion import RecursionTable, TableBoundsError, dp_e, get_table, mu_sequence
from .closedforms import (
    ApplicabilityError,
    NamedFormula,
    RationalGF,
    catalog,
    catalog_entry,
    gf_mu,
    power_sum,
    published_mu,
    weighted_mu_closed,
)
from .fitter import FitShapeError, QuasiPolynomial, fit, verify_fit
from .multinomial import littlewood_e, multinomial_e
from .battery import run_battery

__version__ = "1.0.0"

__all__ = [
    "ApplicabilityError",
    "AverageKey",
    "AverageValue",
    "CoefficientSet",
    "EnumerationBudgetError",
    "FitShapeError",
    "GaussianRational",
    "LaurentPoly",
    "NamedFormula",
    "QuasiPolynomial",
    "Rational",
    "RationalGF",
    "RecursionTable",
    "TableBoundsError",
    "binomial",
    "catalog",
    "catalog_entry",
    "dp_e",
    "fit",
    "format_gaussian",
    "format_rational",
    "get_table",
    "gf_mu",
    "littlewood_e",
    "mu_sequence",
    "multinomial",
    "multinomial_e",
    "norm_power",
    "oracle_e",
    "oracle_mu",
    "parse_coefficient_set",
    "parse_gaussian",
    "power_sum",
    "published_mu",
    "rational",
    "run_battery",
    "verify_fit",
    "weighted_mu_closed",
]
