"""Certified verification that repdigits which are sums of three Padovan numbers are finite in number and known."""

__version__ = "0.1.0"

from .errors import DepthExhausted, DomainError, PrecisionExhausted, UnresolvedException
from .numerics import PrecisionContext, certify_stable, plastic_roots, solve_plastic_cubic
from .padovan import (
    binet_coefficients,
    canonical_index,
    error_term,
    growth_bounds_check,
    padovan,
)
from .repdigit import classify_repdigit, make_repdigit
from .search import KNOWN_REPDIGITS, Solution, ell_window, enumerate_solutions, verify_solution

__all__ = [
    "DepthExhausted", "DomainError", "PrecisionExhausted", "UnresolvedException",
    "PrecisionContext", "certify_stable", "plastic_roots", "solve_plastic_cubic",
    "binet_coefficients", "canonical_index", "error_term", "growth_bounds_check", "padovan",
    "classify_repdigit", "make_repdigit",
    "KNOWN_REPDIGITS", "Solution", "ell_window", "enumerate_solutions", "verify_solution",
]
