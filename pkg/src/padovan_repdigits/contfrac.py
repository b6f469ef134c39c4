"""Certified continued fractions and the Legendre-type gap bound."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Union

from flint import arb

from .errors import DepthExhausted, DomainError, PrecisionExhausted
from .numerics import PrecisionContext, arb_ceil_upper, plastic_roots, working_precision

Target = Union[arb, Callable[[int], arb]]

DEFAULT_TAU_DEPTH = 160


@dataclass(frozen=True)
class ContinuedFractionExpansion:
    """Partial quotients a_0..a_N with exact convergents p_k/q_k (0-based).

    p_k = a_k p_{k-1} + p_{k-2} with p_{-1} = 1, p_{-2} = 0 and likewise
    q_{-1} = 0, q_{-2} = 1, so p_0/q_0 = a_0/1.
    """

    partial_quotients: tuple
    convergents: tuple
    digits: int

    @property
    def certified_depth(self) -> int:
        return len(self.partial_quotients) - 1

    def p(self, k: int) -> int:
        return self.convergents[k][0]

    def q(self, k: int) -> int:
        return self.convergents[k][1]


def convergents_from_quotients(quotients) -> tuple:
    p_prev, p = 0, 1
    q_prev, q = 1, 0
    out = []
    for a in quotients:
        p_prev, p = p, a * p + p_prev
        q_prev, q = q, a * q + q_prev
        out.append((p, q))
    return tuple(out)


def _quotients(x: arb, depth: int) -> list[int] | None:
    """Gauss map with interval floors; None when a floor becomes ambiguous."""
    out = []
    for _ in range(depth):
        f = x.floor().unique_fmpz()
        if f is None:
            return None
        a = int(f)
        if out and a < 1:
            return None
        out.append(a)
        frac = x - a
        if not frac > 0:
            return None
        x = 1 / frac
    return out


def expand(x: Target, depth: int, pctx: PrecisionContext | None = None) -> ContinuedFractionExpansion:
    """First ``depth`` partial quotients of an irrational, each certified.

    ``x`` is either a ball or a function ``digits -> ball``; only the latter
    allows escalating precision when a floor is ambiguous.
    """
    if depth < 1:
        raise DomainError("depth must be >= 1")
    pctx = pctx or PrecisionContext()
    for attempt in pctx.escalations():
        with working_precision(attempt):
            value = x(attempt.decimal_digits) if callable(x) else x
            qs = _quotients(value, depth)
        if qs is not None:
            return ContinuedFractionExpansion(tuple(qs), convergents_from_quotients(qs),
                                              attempt.decimal_digits)
        if not callable(x):
            break
    raise PrecisionExhausted(f"could not certify {depth} partial quotients")


def tau_value(digits: int) -> arb:
    """log 10 / log alpha at ``digits`` digits."""
    return plastic_roots(digits).tau


def tau_expansion(digits: int = 400, depth: int = DEFAULT_TAU_DEPTH) -> ContinuedFractionExpansion:
    return expand(tau_value, depth, PrecisionContext(digits))


def first_convergent_exceeding(cf: ContinuedFractionExpansion, threshold: int) -> int:
    """Smallest index k with q_k > threshold."""
    for k, (_, q) in enumerate(cf.convergents):
        if q > threshold:
            return k
    raise DepthExhausted(f"no q_k > {threshold} within depth {cf.certified_depth}")


@dataclass(frozen=True)
class LegendreBound:
    """|tau - r/s| > 1/((aM + 2) s**2) for all 0 < s < M."""

    M: int
    N_index: int
    aM: int

    def gap(self, s) -> arb:
        return 1 / (arb(self.aM + 2) * arb(s) ** 2)


def legendre_irrationality_bound(cf: ContinuedFractionExpansion, M: int) -> LegendreBound:
    N = first_convergent_exceeding(cf, M)
    return LegendreBound(M, N, max(cf.partial_quotients[: N + 1]))


def dna_threshold(M: int, coeff, log_base: arb, rhs_scale=1) -> int:
    """Smallest w with coeff/(rhs_scale B**w s) < 1/(2 s**2) for every s < M."""
    with working_precision(max(60, int(math.log10(M)) + 30)):
        C = arb(coeff) / arb(rhs_scale)
        if C == 0:
            return 0
        return max(arb_ceil_upper((2 * C * M).log() / log_base), 0)


def homogeneous_reduce(cf: ContinuedFractionExpansion, M: int, A_coeff, log_base: arb,
                       rhs_scale=1) -> int:
    """Bound on w in |tau - r/s| < A_coeff / (rhs_scale * B**w * s), 0 < s < M, B = exp(log_base).

    Once B**w > 2 C M (C = A_coeff / rhs_scale) the right side is below
    1/(2 s**2), so r/s is a convergent and the Legendre gap gives
    B**w < (a(M) + 2) C s < (a(M) + 2) C M.  Returns the largest w allowed by
    either branch.
    """
    if M < 1:
        raise DomainError("M must be positive")
    with working_precision(max(60, int(math.log10(M)) + 30)):
        C = arb(A_coeff) / arb(rhs_scale)
        if C < 0:
            raise DomainError("coefficient must be non-negative")
        if C == 0:
            return 0
        lb = legendre_irrationality_bound(cf, M)
        legendre_w = arb_ceil_upper(((lb.aM + 2) * C * M).log() / log_base) - 1
    return max(legendre_w, dna_threshold(M, A_coeff, log_base, rhs_scale) - 1, 0)
