"""Logarithmic heights, Matveev's lower bound and the Baker bound chain.

Every real here is an ``arb`` ball at :data:`HEIGHT_DIGITS` digits unless a
root system with more digits is supplied.  Bound constants are reported as
upper ends of their balls so that rounding never weakens an inequality.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from math import gcd

from flint import arb

from .errors import DomainError, PrecisionExhausted
from .numerics import PlasticRootSystem, arb_ceil_upper, plastic_roots, working_precision
from .padovan import BinetCoefficients, binet_coefficients

HEIGHT_DIGITS = 60

#: Smallest n1 not covered by the direct search; used to absorb additive constants.
SEARCH_THRESHOLD = 500

# Published constants, kept for comparison only.
PUBLISHED_MATVEEV = (6.16e14, 1.98e28, 1.92e42)
PUBLISHED_CHAIN = (6.18e14, 2e28, 1.94e42)
PUBLISHED_A3 = (None, 5.31e14, 5.16e28)
PUBLISHED_ABSOLUTE_BOUND = 3 * 10**48


class Provenance(enum.Enum):
    RATIONAL = "rational"
    MINIMAL_POLYNOMIAL = "minimal_polynomial"
    COMPOSITE_BOUND = "composite_bound"


@dataclass(frozen=True)
class HeightValue:
    h: arb
    provenance: Provenance

    def __float__(self):
        return float(self.h.mid())


def height_rational(p: int, q: int = 1) -> HeightValue:
    """h(p/q) = log max(|p|, q) for p/q in lowest terms."""
    if q <= 0:
        raise DomainError("denominator must be positive")
    if gcd(abs(p), q) != 1:
        raise DomainError(f"{p}/{q} is not in lowest terms")
    with working_precision(HEIGHT_DIGITS):
        return HeightValue(arb(max(abs(p), q)).log(), Provenance.RATIONAL)


def height_from_min_poly(leading: int, root_magnitudes) -> HeightValue:
    """(1/D) (log a0 + sum log max(|conjugate|, 1)) for a primitive minimal polynomial."""
    if leading <= 0:
        raise DomainError("leading coefficient must be positive")
    D = len(root_magnitudes)
    if D == 0:
        raise DomainError("need at least one conjugate")
    with working_precision(HEIGHT_DIGITS):
        total = arb(leading).log()
        for m in root_magnitudes:
            m = arb(m) if not isinstance(m, arb) else m
            if m > 1:
                total += m.log()
            elif not m <= 1:
                raise PrecisionExhausted(f"conjugate magnitude {m} straddles 1")
        return HeightValue(total / D, Provenance.MINIMAL_POLYNOMIAL)


def height_bound_combine(op: str, hs, s: int = 1) -> HeightValue:
    """Upper bound for the height of a sum, product or integer power.

    ``sum`` charges log 2 for each of the len(hs) - 1 additions, ``product``
    adds heights, ``power`` returns |s| * h for the single entry of ``hs``.
    """
    with working_precision(HEIGHT_DIGITS):
        vals = [h.h if isinstance(h, HeightValue) else arb(h) for h in hs]
        if op == "sum":
            h = sum(vals, arb(0)) + (len(vals) - 1) * arb(2).log()
        elif op == "product":
            h = sum(vals, arb(0))
        elif op == "power":
            if len(vals) != 1:
                raise DomainError("power takes exactly one height")
            h = abs(s) * vals[0]
        else:
            raise DomainError(f"unknown op {op!r}")
    return HeightValue(h, Provenance.COMPOSITE_BOUND)


@dataclass(frozen=True)
class MatveevInput:
    t: int
    D: int
    B: object
    A: tuple

    def __post_init__(self):
        if self.t < 1 or self.D < 1:
            raise DomainError("t and D must be positive")
        if len(self.A) != self.t:
            raise DomainError("need one A_i per algebraic number")
        if not arb(self.B) >= 1:
            raise DomainError("B must be >= 1")
        if any(not arb(a) >= arb("0.16") for a in self.A):
            raise DomainError("every A_i must be >= 0.16")


def matveev_constant(t: int, D: int) -> arb:
    """1.4 * 30**(t+3) * t**4.5 * D**2 * (1 + log D)."""
    with working_precision(HEIGHT_DIGITS):
        return (arb("1.4") * arb(30) ** (t + 3) * arb(t) ** arb("4.5")
                * D**2 * (1 + arb(D).log()))


def matveev_lower_bound(inp: MatveevInput) -> arb:
    """Right-hand side of Matveev's inequality: log|Lambda| exceeds this (negative) value.

    Only meaningful when Lambda is non-zero; that is the caller's business.
    """
    with working_precision(HEIGHT_DIGITS):
        prod = arb(1)
        for a in inp.A:
            prod *= arb(a)
        return -matveev_constant(inp.t, inp.D) * (1 + arb(inp.B).log()) * prod


def matveev_log_coefficient(t: int, D: int, A) -> arb:
    """Coefficient K with Matveev's bound >= -K * log(B) when B >= 3.

    Uses 1 + log B <= 2 log B, so K = 2 * constant * prod(A).
    """
    with working_precision(HEIGHT_DIGITS):
        prod = arb(1)
        for a in A:
            prod *= arb(a)
        return 2 * matveev_constant(t, D) * prod


# --- the Case 1-3 chain -----------------------------------------------------------


@dataclass(frozen=True)
class BoundChain:
    """n1 - n2 <= c1 log n1, n2 - n3 <= c2 (log n1)**2, n1 <= c3 (log n1)**3.

    ``matveev`` holds the coefficients K_i with log|Lambda_i| > -K_i (log n1)**i log alpha,
    ``a3`` the A_3 coefficients of cases 2 and 3 (per power of log n1).
    """

    c1: float
    c2: float
    c3: float
    absolute_bound: int
    matveev: tuple = ()
    a3: tuple = ()
    log_power_bound: int = 0
    fixed_point: int = 0

    def as_dict(self):
        return {
            "c1": self.c1, "c2": self.c2, "c3": self.c3,
            "absolute_bound": self.absolute_bound,
            "matveev": list(self.matveev), "a3": list(self.a3),
            "log_power_bound": self.log_power_bound, "fixed_point": self.fixed_point,
        }


def _upper(x: arb) -> float:
    return float(x.upper().mid()) * (1 + 1e-15)


def minimal_polynomial_of(coeffs: BinetCoefficients, shifted: bool = False):
    """Numerical coefficients of 23 (x - a)(x - b)(x - c).

    For the Binet coefficients of P_n this is 23x^3 - 5x - 1; for the shifted
    coefficients (alpha*a, beta*b, gamma*c) it is 23x^3 - 23x^2 + 6x - 1.
    """
    roots = coeffs.roots
    with working_precision(coeffs.context):
        a, b, c = coeffs.a, coeffs.b, coeffs.c
        if shifted:
            a, b, c = a * roots.alpha, b * roots.beta, c * roots.gamma
        e1 = a + b + c
        e2 = a * b + a * c + b * c
        e3 = a * b * c
        return [arb(23), (-23 * e1).real, (23 * e2).real, (-23 * e3).real]


def case_bounds(roots: PlasticRootSystem | None = None,
                coeffs: BinetCoefficients | None = None,
                n1_min: int = SEARCH_THRESHOLD) -> BoundChain:
    """Recompute the Baker bounds of Cases 1-3 for n1 > ``n1_min``.

    Case 1 bounds n1 - n2 through Lambda_1 = 10**l alpha**-n1 d/(9a) - 1 with
    |Lambda_1| < 5 alpha**-(n1-n2).  Case 2 feeds that into the height of
    d/(9a(1 + alpha**k)) and bounds n2 - n3 (|Lambda_2| < 3 alpha**-(n2-n3)).
    Case 3 feeds both into the height of d/(9a(1 + alpha**k + alpha**s)) and
    bounds n1 (|Lambda_3| < 5 alpha**-n1).  Each constant also absorbs the
    additive log(5)/log(alpha) style terms, using log n1 > log n1_min.
    """
    roots = roots or plastic_roots(HEIGHT_DIGITS)
    coeffs = coeffs or binet_coefficients(roots)
    _check_nonvanishing_witness(coeffs)

    with working_precision(HEIGHT_DIGITS):
        la = roots.alpha.log()
        L = arb(n1_min).log()
        log2, log3 = arb(2).log(), arb(3).log()
        h_alpha = height_from_min_poly(1, [roots.alpha, abs(roots.beta), abs(roots.gamma)])
        h_a = height_from_min_poly(23, [coeffs.a, abs(coeffs.b), abs(coeffs.c)])
        h_d9a = height_bound_combine("product", [height_rational(9), height_rational(9), h_a])
        A1 = 3 * height_rational(10).h
        A2 = max_arb(3 * h_alpha.h, la)
        if not abs(A2 - la) < arb(10) ** -40:
            raise PrecisionExhausted("expected A_2 = log(alpha)")

        # Case 1: A3 = 3 h(d/(9a)) <= 15 log 3
        A3_1 = 3 * h_d9a.h
        if not A3_1 <= 15 * log3:
            raise PrecisionExhausted("h(d/(9a)) exceeds 5 log 3")
        K1 = matveev_log_coefficient(3, 3, [A1, A2, 15 * log3]) / A2
        c1 = K1 + arb(5).log() / (la * L)

        # Case 2: h(eta_3) <= h(d/(9a)) + k log(alpha) + log 2 with k <= c1 log n1
        h2 = c1 * la + (h_d9a.h + log2) / L
        A3_2 = 3 * h2
        K2 = matveev_log_coefficient(3, 3, [A1, A2, A3_2]) / A2
        c2 = K2 + log3 / (la * L**2)

        # Case 3: (k + s) log(alpha) with k + s <= c1 log n1 + 2 c2 (log n1)**2
        h3 = 2 * c2 * la + c1 * la / L + (h_d9a.h + 2 * log2) / L**2
        A3_3 = 3 * h3
        K3 = matveev_log_coefficient(3, 3, [A1, A2, A3_3]) / A2
        c3 = K3 + arb(5).log() / (la * L**3)

    c3f = _upper(c3)
    lp = log_power_bound(3, c3f)
    fixed = fixed_point_bound(3, c3f)
    return BoundChain(
        c1=_upper(c1), c2=_upper(c2), c3=c3f,
        absolute_bound=round_up_leading_digit(min(lp, fixed)),
        matveev=(_upper(K1), _upper(K2), _upper(K3)),
        a3=(_upper(A3_1), _upper(A3_2), _upper(A3_3)),
        log_power_bound=lp, fixed_point=fixed,
    )


def max_arb(x: arb, y: arb) -> arb:
    return x.max(y)


def _check_nonvanishing_witness(coeffs: BinetCoefficients):
    """10**l d / 9 >= 100/9 > 1 > 3|b|: each Lambda_i would otherwise vanish under conjugation."""
    with working_precision(HEIGHT_DIGITS):
        if not (3 * abs(coeffs.b) < 1 < arb(100) / 9):
            raise PrecisionExhausted("non-vanishing witness 3|b| < 1 not certified")


# --- Guzman-Luca bound and the absolute bound ------------------------------------------------


def log_power_bound(r: int, H: float) -> int:
    """2**r * H * (log H)**r, valid when H > (4 r**2)**r and L / (log L)**r < H."""
    if r < 1:
        raise DomainError("r must be >= 1")
    with working_precision(HEIGHT_DIGITS):
        Hb = arb(repr(float(H))) if isinstance(H, float) else arb(H)
        if not Hb > arb(4 * r * r) ** r:
            raise DomainError(f"need H > (4r^2)^r = {(4 * r * r) ** r}")
        return arb_ceil_upper(arb(2) ** r * Hb * Hb.log() ** r)


def fixed_point_bound(r: int, c: float) -> int:
    """Integer L* with c (log L)**r < L for all L >= L*.

    Iterates L <- c (log L)**r from above, which decreases to the largest
    fixed point, and certifies the result.
    """
    with working_precision(HEIGHT_DIGITS):
        cb = arb(repr(float(c))) if isinstance(c, float) else arb(c)
        L = cb * (2 * r * cb.log()) ** r
        for _ in range(200):
            nxt = cb * L.log() ** r
            if abs(nxt - L) < 1:
                break
            L = nxt
        Lint = arb_ceil_upper(L) + 1
        # above the fixed point x - c (log x)**r is increasing (derivative 1 - c r (log x)**(r-1)/x > 0)
        x = arb(Lint)
        if not (cb * x.log() ** r < x and cb * r * x.log() ** (r - 1) < x):
            raise PrecisionExhausted("fixed point of L = c (log L)^r not certified")
        return Lint


def guzman_luca_bound(r: int, H: float, c: float | None = None) -> int:
    """The smaller of the Guzman-Luca bound and the certified fixed-point bound.

    Any L with L <= c (log L)**r satisfies L < returned value.
    """
    c = H if c is None else c
    return min(log_power_bound(r, H), fixed_point_bound(r, c))


def round_up_leading_digit(n: int) -> int:
    """Round n up to one significant digit, e.g. 2_691... x 10**48 -> 3 x 10**48."""
    e = len(str(n)) - 1
    lead = -(-n // 10**e)
    return lead * 10**e


def absolute_bound(chain: BoundChain | None = None) -> int:
    """Upper bound on n1 from the Baker chain, rounded up to one significant digit."""
    chain = chain or case_bounds()
    return round_up_leading_digit(guzman_luca_bound(3, chain.c3))


def log_factor_majorant_ok(n1: int) -> bool:
    """1 + log n1 <= 2 log n1, the replacement used for Matveev's (1 + log B)."""
    return 1 + math.log(n1) <= 2 * math.log(n1)
