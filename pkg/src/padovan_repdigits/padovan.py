"""Padovan numbers, their Binet coefficients and the error term e(n)."""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass

from flint import acb, arb

from .errors import DomainError, PrecisionExhausted
from .numerics import (
    GUARD_DIGITS,
    PlasticRootSystem,
    PrecisionContext,
    plastic_roots,
    working_precision,
)

# log10(alpha) < 0.1222, used to size working precision for alpha**n
_LOG10_ALPHA_UPPER = 0.1222

_table = [0, 1, 1]
_table_lock = threading.Lock()


def padovan(n: int) -> int:
    """Exact P_n with P_0 = 0, P_1 = P_2 = 1 and P_{n+3} = P_{n+1} + P_n."""
    if n < 0:
        raise DomainError("Padovan index must be non-negative")
    if n >= len(_table):
        with _table_lock:
            while len(_table) <= n:
                _table.append(_table[-2] + _table[-3])
    return _table[n]


def padovan_list(n_max: int) -> list[int]:
    """[P_0, ..., P_{n_max}]."""
    padovan(n_max)
    return _table[: n_max + 1]


def canonical_index(n: int) -> int:
    """Representative index outside {1, 2, 4}: P_1 = P_2 = P_3 and P_4 = P_5."""
    if n < 0:
        raise DomainError("index must be non-negative")
    return {1: 3, 2: 3, 4: 5}.get(n, n)


@dataclass(frozen=True)
class BinetCoefficients:
    """P_n = a*alpha**n + b*beta**n + c*gamma**n.

    ``a`` is (alpha+1)/((alpha-beta)(alpha-gamma)) = 0.5451...  The values
    0.7221... = alpha*(alpha+1)/(3*alpha**2-1) and |beta*b| = 0.2453... often
    quoted for this sequence are the coefficients of the shifted expansion
    P_{n+1} = sum (root*coef) * root**n; see the ``shifted_*`` properties.
    """

    a: arb
    b: acb
    c: acb
    context: PrecisionContext
    roots: PlasticRootSystem

    @property
    def shifted_a(self) -> arb:
        with working_precision(self.context):
            return self.a * self.roots.alpha

    @property
    def shifted_b(self) -> acb:
        with working_precision(self.context):
            return self.b * self.roots.beta

    @property
    def shifted_c(self) -> acb:
        with working_precision(self.context):
            return self.c * self.roots.gamma


def binet_coefficients(roots: PlasticRootSystem) -> BinetCoefficients:
    """Binet coefficients from the conjugate-difference formula, cross-checked
    against the closed form alpha*(alpha+1)/(3*alpha**2-1) = alpha*a."""
    pctx = roots.context
    tol = pctx.tolerance
    alpha, beta, gamma = roots.alpha, roots.beta, roots.gamma
    with working_precision(pctx):
        al = acb(alpha)
        a_full = (al + 1) / ((al - beta) * (al - gamma))
        b = (beta + 1) / ((beta - al) * (beta - gamma))
        c = (gamma + 1) / ((gamma - al) * (gamma - beta))
        closed = alpha * (alpha + 1) / (3 * alpha**2 - 1)
        if not (abs(a_full.imag) < tol and abs(alpha * a_full.real - closed) < tol):
            raise PrecisionExhausted("Binet coefficient a: formulas disagree")
        if not abs(c - b.conjugate()) < tol:
            raise PrecisionExhausted("Binet coefficient c is not conj(b)")
        a = closed / alpha
    return BinetCoefficients(a, b, c, pctx, roots)


def default_coefficients(digits: int = 400) -> BinetCoefficients:
    return binet_coefficients(plastic_roots(digits))


def _digits_for_power(n: int, pctx: PrecisionContext) -> int:
    return pctx.decimal_digits + math.ceil(abs(n) * _LOG10_ALPHA_UPPER) + GUARD_DIGITS


def error_term(n: int, coeffs: BinetCoefficients) -> arb:
    """e(n) = P_n - a*alpha**n = b*beta**n + c*gamma**n.

    Evaluated through the conjugate pair and through the exact integer P_n;
    the two enclosures must overlap.  The conjugate-pair enclosure is returned.
    """
    if n < 1:
        raise DomainError("error_term needs n >= 1")
    pctx = coeffs.context
    with working_precision(pctx):
        pair = coeffs.b * coeffs.roots.beta**n + coeffs.c * coeffs.roots.gamma**n
        if not abs(pair.imag) < pctx.tolerance:
            raise PrecisionExhausted(f"e({n}) is not certified real")
        pair = pair.real
    # alpha is only known to the context radius; a*alpha**n at wide precision
    # is no sharper than that, so exactness comes from the integer P_n.
    with working_precision(_digits_for_power(n, pctx)):
        direct = padovan(n) - coeffs.a * coeffs.roots.alpha**n
        if not direct.overlaps(pair):
            raise PrecisionExhausted(f"e({n}): evaluation paths disagree")
    return pair


def alpha_power(roots: PlasticRootSystem, k: int) -> arb:
    """alpha**k; exactly 1 for k = 0."""
    if k == 0:
        return arb(1)
    with working_precision(_digits_for_power(k, roots.context)):
        return roots.alpha**k


def growth_bounds_check(n: int, roots: PlasticRootSystem | None = None) -> bool:
    """Certified test of alpha**(n-3) <= P_n <= alpha**(n-1)."""
    if n < 1:
        raise DomainError("growth bounds need n >= 1")
    roots = roots or plastic_roots(50)
    p = padovan(n)
    lo, hi = alpha_power(roots, n - 3), alpha_power(roots, n - 1)
    with working_precision(_digits_for_power(n, roots.context)):
        # alpha**k is irrational for k != 0, so equality only occurs at n = 1, 3
        lower_ok = bool(lo <= p)
        upper_ok = bool(p <= hi)
        if not (lower_ok or lo > p) or not (upper_ok or p > hi):
            raise PrecisionExhausted(f"growth comparison for n={n} straddles the error radius")
    return lower_ok and upper_ok
