"""Ball arithmetic helpers and certified roots of x^3 - x - 1.

All real quantities are ``flint.arb`` balls (midpoint plus radius) and all
complex ones ``flint.acb``.  Arithmetic rounds to nearest on the midpoint and
the radius absorbs every rounding error, so a comparison such as ``x > 0``
is only ``True`` when it holds for every point of the ball.
"""

from __future__ import annotations

import contextlib
from dataclasses import dataclass
from functools import lru_cache

import mpmath
from flint import acb, arb, ctx

from .errors import DomainError, PrecisionExhausted

#: Guard digits: a value produced at ``d`` digits has radius <= 10**(g - d).
GUARD_DIGITS = 5
MIN_DIGITS = 50
DEFAULT_MAX_DIGITS = 2000


@dataclass(frozen=True)
class PrecisionContext:
    decimal_digits: int = 400
    max_digits: int = DEFAULT_MAX_DIGITS

    def __post_init__(self):
        if self.decimal_digits < MIN_DIGITS:
            raise DomainError(f"decimal_digits must be >= {MIN_DIGITS}, got {self.decimal_digits}")
        if self.max_digits < self.decimal_digits:
            raise DomainError("max_digits must be >= decimal_digits")

    @property
    def tolerance(self) -> arb:
        """Error radius promised for values produced under this context."""
        return arb(10) ** (GUARD_DIGITS - self.decimal_digits)

    def doubled(self) -> PrecisionContext | None:
        if self.decimal_digits >= self.max_digits:
            return None
        return PrecisionContext(min(2 * self.decimal_digits, self.max_digits), self.max_digits)

    def escalations(self):
        """Yield this context, then doubled ones up to ``max_digits``."""
        c = self
        while c is not None:
            yield c
            c = c.doubled()


@contextlib.contextmanager
def working_precision(digits):
    """Run arb/acb arithmetic at ``digits`` decimal digits plus guard digits."""
    if isinstance(digits, PrecisionContext):
        digits = digits.decimal_digits
    with ctx.workdps(digits + GUARD_DIGITS):
        yield


def to_arb(x) -> arb:
    if isinstance(x, arb):
        return x
    if isinstance(x, float):
        return arb(repr(x))
    return arb(x)


def certify_stable(value_at_p, value_at_2p, tol) -> bool:
    """True iff two evaluations of one quantity certainly differ by less than ``tol``."""
    diff = abs(to_arb(value_at_p) - to_arb(value_at_2p))
    return bool(diff < to_arb(tol))


def distance_to_nearest_integer(x: arb) -> arb:
    """Certified enclosure of ||x||, the distance from x to the nearest integer."""
    frac = x - x.mid().floor()
    if frac < arb("0.5"):
        return abs(frac)
    if frac > arb("0.5"):
        return abs(1 - frac)
    return abs(frac).union(abs(1 - frac))


def nearest_integer(x: arb) -> int:
    return int((x.mid() + arb("0.5")).floor().unique_fmpz())


def arb_floor_int(x: arb) -> int:
    """Exact floor of ``x`` or :class:`PrecisionExhausted` if the ball straddles an integer."""
    f = x.floor()
    z = f.unique_fmpz()
    if z is None:
        raise PrecisionExhausted(f"floor of {x} is ambiguous at current precision")
    return int(z)


def arb_ceil_upper(x: arb) -> int:
    """Smallest integer >= every point of ``x`` (conservative ceiling)."""
    return int(x.upper().ceil().unique_fmpz())


# --- roots of x^3 - x - 1 -----------------------------------------------------


@dataclass(frozen=True)
class PlasticRootSystem:
    alpha: arb
    beta: acb
    gamma: acb
    r1: arb
    r2: arb
    context: PrecisionContext

    @property
    def log_alpha(self) -> arb:
        with working_precision(self.context):
            return self.alpha.log()

    @property
    def tau(self) -> arb:
        """log 10 / log alpha."""
        with working_precision(self.context):
            return arb(10).log() / self.alpha.log()


def _radical_roots(digits: int):
    with working_precision(digits):
        s69 = arb(69).sqrt()
        r1 = (108 + 12 * s69).root(3)
        r2 = (108 - 12 * s69).root(3)  # 108 > 12*sqrt(69), real cube root is positive
        alpha = (r1 + r2) / 6
        i_sqrt3 = acb(0, arb(3).sqrt())
        beta = (-(r1 + r2) + i_sqrt3 * (r1 - r2)) / 12
        return r1, r2, alpha, beta


def _newton_roots(digits: int):
    """Independent route: Newton iteration on x^3 - x - 1 with mpmath."""
    f = lambda z: z**3 - z - 1
    df = lambda z: 3 * z**2 - 1
    with mpmath.workdps(digits + 2 * GUARD_DIGITS):
        tol = mpmath.mpf(10) ** (-(digits + GUARD_DIGITS))
        out = []
        for z in (mpmath.mpf("1.3"), mpmath.mpc("-0.66", "0.56")):
            for _ in range(200):
                step = f(z) / df(z)
                z -= step
                if abs(step) < tol:
                    break
            else:
                raise PrecisionExhausted("Newton iteration did not converge")
            out.append(z)
        a, b = out
        return str(a), (str(b.real), str(b.imag))


def _check_roots(alpha, beta, newton, pctx: PrecisionContext) -> bool:
    tol = pctx.tolerance
    with working_precision(pctx):
        a_n = arb(newton[0])
        b_n = acb(arb(newton[1][0]), arb(newton[1][1]))
        if not abs(alpha - a_n) < tol or not abs(beta - b_n) < tol:
            return False
        if not abs(alpha**3 - alpha - 1) < tol or not abs(beta**3 - beta - 1) < tol:
            return False
        return alpha.rad() < tol and beta.real.rad() < tol and beta.imag.rad() < tol


def solve_plastic_cubic(pctx: PrecisionContext | None = None) -> PlasticRootSystem:
    """Certified roots of x^3 - x - 1.

    The radical formulas for alpha and beta are evaluated in ball arithmetic
    and cross-checked against Newton refinement done separately in mpmath.
    On disagreement the precision is doubled up to ``pctx.max_digits``.
    """
    pctx = pctx or PrecisionContext()
    for attempt in pctx.escalations():
        r1, r2, alpha, beta = _radical_roots(attempt.decimal_digits)
        newton = _newton_roots(attempt.decimal_digits)
        if _check_roots(alpha, beta, newton, attempt):
            with working_precision(attempt):
                gamma = beta.conjugate()
            return PlasticRootSystem(alpha, beta, gamma, r1, r2, attempt)
    raise PrecisionExhausted(f"roots not certified within {pctx.max_digits} digits")


@lru_cache(maxsize=16)
def plastic_roots(digits: int = 400) -> PlasticRootSystem:
    """Cached :func:`solve_plastic_cubic` at ``digits`` decimal digits."""
    return solve_plastic_cubic(PrecisionContext(digits, max(digits, DEFAULT_MAX_DIGITS)))


def arb_to_triple(x: arb, digits: int = 30) -> tuple[int, int, int]:
    """(mid, rad, exp) integers with x contained in [mid +/- rad] * 10**exp."""
    mid, rad, exp = x.mid_rad_10exp(digits)
    return int(mid), int(rad), int(exp)


def arb_from_triple(mid: int, rad: int, exp: int) -> arb:
    ten = arb(10) ** exp
    return arb(mid) * ten + arb(0, (arb(rad) * ten).abs_upper())


def triple_to_float(t) -> float:
    mid, _, exp = t
    return float(mid) * 10.0**exp if abs(exp) < 300 else float(f"{mid}e{exp}")
