"""Dujella-Petho reduction and the three-stage reduction of the Baker bound.

Each stage looks at |u tau - v + mu| < A alpha**-w with tau = log 10/log alpha
and a family of shifts mu.  For a convergent p/q of tau with q > 6M, every
solution with u <= M has w < log(A q / eps) / log alpha, where
eps = ||mu q|| - M ||tau q|| must be positive.
"""

from __future__ import annotations

import enum
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache

from flint import arb

from .contfrac import (
    ContinuedFractionExpansion,
    DEFAULT_TAU_DEPTH,
    dna_threshold,
    first_convergent_exceeding,
    homogeneous_reduce,
    tau_expansion,
)
from .errors import DepthExhausted, DomainError, UnresolvedException
from .numerics import (
    PlasticRootSystem,
    arb_ceil_upper,
    arb_to_triple,
    distance_to_nearest_integer,
    nearest_integer,
    plastic_roots,
    triple_to_float,
    working_precision,
)
from .padovan import BinetCoefficients, binet_coefficients

#: n1 <= SEARCH_THRESHOLD is settled by direct search.
SEARCH_THRESHOLD = 500
#: Stages assume the reduced quantity is at least this large.
TECHNICAL_MINIMUM = 20
PUBLISHED_M = 3 * 10**48
#: How many convergents past the first admissible one are tried for a case.
EXTRA_CONVERGENTS = 12

# Published A-coefficients for each stage (ceil of numerator/log alpha).
PUBLISHED_A = {1: 36, 2: 22, 3: 36}
# Numerators of |Gamma_i| < numerator * alpha**-w.
GAMMA_NUMERATOR = {1: 10, 2: 6, 3: 10}
PUBLISHED_STAGE_BOUNDS = {1: 432, 2: 446, "homogeneous": 435, 3: 485}
PUBLISHED_MIN_EPSILON = {1: 0.0129487, 2: 0.000134829, 3: 0.000125}


class Status(str, enum.Enum):
    BOUNDED = "bounded"
    EPSILON_NONPOSITIVE = "epsilon_nonpositive"


@dataclass(frozen=True)
class ReductionProblem:
    tau: arb
    mu: arb
    A: int
    B: arb
    M: int

    def __post_init__(self):
        if not self.A > 0:
            raise DomainError("A must be positive")
        if not self.B > 1:
            raise DomainError("B must exceed 1")
        if self.M < 1:
            raise DomainError("M must be positive")


@dataclass(frozen=True)
class ReductionOutcome:
    status: Status
    epsilon: arb
    w_bound: int | None
    q_index: int


class _Reducer:
    """Davenport-style reducer with per-convergent quantities cached for one (tau, A, B, M)."""

    def __init__(self, tau: arb, cf: ContinuedFractionExpansion, A, B: arb, M: int,
                 digits: int, extra: int = EXTRA_CONVERGENTS):
        self.tau, self.cf, self.M, self.digits = tau, cf, M, digits
        self.start = first_convergent_exceeding(cf, 6 * M)
        self.stop = min(self.start + extra, cf.certified_depth) + 1
        with working_precision(digits):
            self.log_B = B.log()
            self.log_A = arb(A).log()
            self._per_q = []
            for j in range(self.start, self.stop):
                q = cf.q(j)
                self._per_q.append((j, q, M * distance_to_nearest_integer(tau * q), arb(q).log()))

    def reduce(self, mu: arb, first_only: bool = False) -> ReductionOutcome:
        first_eps = None
        with working_precision(self.digits):
            for j, q, m_tau, log_q in self._per_q:
                eps = distance_to_nearest_integer(mu * q) - m_tau
                if first_eps is None:
                    first_eps = eps
                if eps > 0:
                    w = (self.log_A + log_q - eps.log()) / self.log_B
                    return ReductionOutcome(Status.BOUNDED, eps, arb_ceil_upper(w), j)
                if first_only:
                    break
        return ReductionOutcome(Status.EPSILON_NONPOSITIVE, first_eps, None, self.start)


def davenport_reduce(p: ReductionProblem, cf: ContinuedFractionExpansion,
                     digits: int | None = None, extra: int = EXTRA_CONVERGENTS) -> ReductionOutcome:
    """Bound w in 0 < |u tau - v + mu| < A B**-w, u <= M.

    Starts at the first convergent with q > 6M and moves to later ones while
    eps is not certified positive.  Raises :class:`DepthExhausted` when the
    expansion has no admissible convergent.
    """
    digits = digits or cf.digits
    return _Reducer(p.tau, cf, p.A, p.B, p.M, digits, extra).reduce(p.mu)


# --- shared setup ---------------------------------------------------------------------


@dataclass(frozen=True)
class ReductionSetup:
    roots: PlasticRootSystem
    coeffs: BinetCoefficients
    cf: ContinuedFractionExpansion
    digits: int

    @property
    def tau(self) -> arb:
        return self.roots.tau

    @property
    def log_alpha(self) -> arb:
        return self.roots.log_alpha

    def mu(self, d: int, *powers: int) -> arb:
        """log(d / (9a(1 + alpha**k + ...))) / log alpha."""
        with working_precision(self.digits):
            den = 1 + sum((self.alpha_pow(k) for k in powers), arb(0))
            return (arb(d) / (9 * self.coeffs.a * den)).log() / self.log_alpha

    def alpha_pow(self, k: int) -> arb:
        with working_precision(self.digits):
            return self.roots.alpha ** k


@lru_cache(maxsize=4)
def reduction_setup(digits: int = 400, depth: int = DEFAULT_TAU_DEPTH) -> ReductionSetup:
    roots = plastic_roots(digits)
    return ReductionSetup(roots, binet_coefficients(roots), tau_expansion(digits, depth), digits)


def a_coefficient(setup: ReductionSetup, stage: int) -> int:
    """ceil(numerator / log alpha); must not exceed the published rounded constant."""
    with working_precision(setup.digits):
        A = arb_ceil_upper(arb(GAMMA_NUMERATOR[stage]) / setup.log_alpha)
    if A > PUBLISHED_A[stage]:
        raise AssertionError(f"stage {stage}: A = {A} exceeds {PUBLISHED_A[stage]}")
    return A


# --- stage results ----------------------------------------------------------------------


@dataclass
class ExceptionCase:
    """A shift with non-positive eps explained by mu being an integer."""

    params: tuple
    mu_integer: int
    homogeneous_bound: int
    dna_threshold: int
    resolution: str = "integer mu; Legendre bound on convergent r/s"


@dataclass
class StageResult:
    stage: int
    A: int
    q_index: int
    cases: int
    main_bound: int
    min_epsilon: tuple
    min_epsilon_at: tuple
    max_bound_at: tuple
    escalated: int = 0
    exceptions: list = field(default_factory=list)

    @property
    def homogeneous_bound(self) -> int:
        return max((e.homogeneous_bound for e in self.exceptions), default=0)

    @property
    def bound(self) -> int:
        """Largest w allowed by either branch, at least the technical minimum."""
        return max(self.main_bound, self.homogeneous_bound, TECHNICAL_MINIMUM)

    @property
    def min_epsilon_value(self) -> float:
        return triple_to_float(self.min_epsilon)


@dataclass
class _Summary:
    cases: int = 0
    main_bound: int = 0
    max_bound_at: tuple = ()
    min_eps: tuple | None = None
    min_eps_at: tuple = ()
    min_eps_float: float = math.inf
    escalated: int = 0
    exceptions: list = field(default_factory=list)

    def merge(self, other: _Summary) -> _Summary:
        out = _Summary(self.cases + other.cases, escalated=self.escalated + other.escalated,
                       exceptions=sorted(self.exceptions + other.exceptions, key=lambda e: e.params))
        a, b = sorted([self, other], key=lambda s: (-s.main_bound, s.max_bound_at))
        out.main_bound, out.max_bound_at = a.main_bound, a.max_bound_at
        a, b = sorted([self, other], key=lambda s: (s.min_eps_float, s.min_eps_at))
        out.min_eps, out.min_eps_at, out.min_eps_float = a.min_eps, a.min_eps_at, a.min_eps_float
        return out


def _resolve_exception(setup: ReductionSetup, stage: int, params: tuple, mu: arb, M: int,
                       reducer: _Reducer) -> ExceptionCase | None:
    """Integer mu turns the form into |tau - r/s| < C/(alpha**w s); None if mu is not integral."""
    n = nearest_integer(mu)
    with working_precision(setup.digits):
        if not abs(mu - n) < arb(10) ** (5 - setup.digits):
            return None
        la = setup.log_alpha
    numerator = GAMMA_NUMERATOR[stage]
    return ExceptionCase(
        params, n,
        homogeneous_reduce(setup.cf, M, numerator, la, la),
        dna_threshold(M, numerator, la, la),
    )


def _sweep(setup: ReductionSetup, stage: int, M: int, grid, extra: int) -> _Summary:
    """Reduce every (d, powers...) in ``grid``; grid yields power tuples, d runs 1..9."""
    A = a_coefficient(setup, stage)
    with working_precision(setup.digits):
        reducer = _Reducer(setup.tau, setup.cf, A, setup.roots.alpha, M, setup.digits, extra)
        la = setup.log_alpha
        log_d = [arb(d).log() for d in range(10)]
        log_9a = (9 * setup.coeffs.a).log()
        pow_cache = {}

        def apow(k):
            if k not in pow_cache:
                pow_cache[k] = setup.roots.alpha ** k
            return pow_cache[k]

        s = _Summary()
        for powers in grid:
            den = 1 + sum((apow(k) for k in powers), arb(0))
            base = log_9a + den.log()
            for d in range(1, 10):
                params = (d, *powers)
                mu = (log_d[d] - base) / la
                out = reducer.reduce(mu, first_only=True)
                if out.status is Status.EPSILON_NONPOSITIVE:
                    exc = _resolve_exception(setup, stage, params, mu, M, reducer)
                    if exc is not None:
                        s.exceptions.append(exc)
                        s.cases += 1
                        continue
                    out = reducer.reduce(mu)
                    if out.status is Status.EPSILON_NONPOSITIVE:
                        raise UnresolvedException(
                            f"stage {stage}, case {params}: eps <= 0 for convergents "
                            f"{reducer.start}..{reducer.stop - 1} and mu is not an integer")
                    s.escalated += 1
                s.cases += 1
                if out.w_bound > s.main_bound:
                    s.main_bound, s.max_bound_at = out.w_bound, params
                eps_f = float(out.epsilon.mid())
                if eps_f < s.min_eps_float:
                    s.min_eps_float, s.min_eps_at = eps_f, params
                    s.min_eps = arb_to_triple(out.epsilon)
    return s


def _stage_result(stage: int, setup: ReductionSetup, M: int, summary: _Summary) -> StageResult:
    return StageResult(
        stage=stage, A=a_coefficient(setup, stage),
        q_index=first_convergent_exceeding(setup.cf, 6 * M),
        cases=summary.cases, main_bound=summary.main_bound,
        min_epsilon=summary.min_eps, min_epsilon_at=summary.min_eps_at,
        max_bound_at=summary.max_bound_at, escalated=summary.escalated,
        exceptions=sorted(summary.exceptions, key=lambda e: e.params),
    )


def stage1(M: int = PUBLISHED_M, setup: ReductionSetup | None = None, digits: int = 400,
           extra: int = EXTRA_CONVERGENTS) -> StageResult:
    """Bound n1 - n2 from |l tau - n1 + mu_d| < 36 alpha**-(n1-n2), mu_d = log(d/(9a))/log alpha."""
    setup = setup or reduction_setup(digits)
    return _stage_result(1, setup, M, _sweep(setup, 1, M, [()], extra))


def stage2(M: int = PUBLISHED_M, k_max: int = 433, setup: ReductionSetup | None = None,
           digits: int = 400, k_min: int = 0, extra: int = EXTRA_CONVERGENTS) -> StageResult:
    """Bound n2 - n3 from |l tau - n2 + mu_{d,k}| < 22 alpha**-(n2-n3), k = n1 - n2."""
    setup = setup or reduction_setup(digits)
    grid = [(k,) for k in range(k_min, k_max + 1)]
    return _stage_result(2, setup, M, _sweep(setup, 2, M, grid, extra))


def _stage3_grid(k_max: int, s_max: int, s_values=None):
    for s in (range(0, s_max + 1) if s_values is None else s_values):
        for k in range(s, k_max + 1):
            yield (k, s)


def _stage3_worker(args):
    digits, depth, M, k_max, s_max, s_values, extra = args
    setup = reduction_setup(digits, depth)
    return _sweep(setup, 3, M, _stage3_grid(k_max, s_max, s_values), extra)


def stage3(M: int = PUBLISHED_M, k_max: int = 880, s_max: int = 447,
           setup: ReductionSetup | None = None, digits: int = 400, workers: int = 1,
           grid=None, extra: int = EXTRA_CONVERGENTS) -> StageResult:
    """Bound n1 from |l tau - n3 + mu_{d,k,s}| < 36 alpha**-n1 with k = n1 - n3 >= s = n2 - n3.

    ``grid`` may restrict the (k, s) pairs (used for sub-sweeps); with
    ``workers > 1`` the s-range is split across processes.
    """
    setup = setup or reduction_setup(digits)
    if grid is not None:
        summary = _sweep(setup, 3, M, grid, extra)
    elif workers <= 1:
        summary = _sweep(setup, 3, M, _stage3_grid(k_max, s_max), extra)
    else:
        parts = [list(range(i, s_max + 1, workers)) for i in range(workers)]
        args = [(setup.digits, setup.cf.certified_depth + 1, M, k_max, s_max, p, extra)
                for p in parts if p]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            summaries = list(pool.map(_stage3_worker, args))
        summary = summaries[0]
        for other in summaries[1:]:
            summary = summary.merge(other)
    return _stage_result(3, setup, M, summary)


def verify_degenerate_shift_identity(roots: PlasticRootSystem | None = None, coeffs: BinetCoefficients | None = None,
                        exponent: int = 9) -> bool:
    """Check 1/alpha**exponent == 1/(a (1 + alpha**11)) to the context's radius.

    With a = (alpha+1)/(3 alpha**2 - 1) the right side is
    (3 alpha**2 - 1)/((alpha + 1)(alpha**11 + 1)), which equals alpha**-9; this is
    why mu_{9,11} = -9 and eps_{9,11} is never positive.
    """
    roots = roots or plastic_roots(400)
    coeffs = coeffs or binet_coefficients(roots)
    al = roots.alpha
    with working_precision(roots.context):
        lhs = 1 / al**exponent
        rhs = 1 / (coeffs.a * (1 + al**11))
        return bool(abs(lhs - rhs) < roots.context.tolerance)


def degenerate_identity_with_extra_alpha(roots: PlasticRootSystem | None = None) -> arb:
    """|alpha**-9 - (3 alpha**2 - 1)/(alpha (alpha + 1)(alpha**11 + 1))|.

    This literal form carries an extra factor alpha in the denominator and is
    not an identity (the difference is about 0.0195).
    """
    roots = roots or plastic_roots(400)
    al = roots.alpha
    with working_precision(roots.context):
        return abs(1 / al**9 - (3 * al**2 - 1) / (al * (al + 1) * (al**11 + 1)))


# --- the full pipeline ------------------------------------------------------------------


@dataclass
class ReductionCertificate:
    M: int
    digits: int
    q_index: int
    p_q: tuple
    stage1: StageResult
    stage2: StageResult
    stage3: StageResult
    search_threshold: int = SEARCH_THRESHOLD

    @property
    def stage1_bound(self) -> int:
        return self.stage1.bound

    @property
    def stage2_bound(self) -> int:
        return self.stage2.bound

    @property
    def stage3_bound(self) -> int:
        return self.stage3.bound

    @property
    def stage2_exceptions(self) -> list:
        return self.stage2.exceptions

    @property
    def contradiction(self) -> bool:
        return self.stage3_bound <= self.search_threshold


def run_full_reduction(M: int = PUBLISHED_M, digits: int = 400, workers: int = 1,
                       extra: int = EXTRA_CONVERGENTS) -> ReductionCertificate:
    """stage1 -> stage2 -> stage3, each feeding its bound into the next sweep's ranges."""
    setup = reduction_setup(digits)
    s1 = stage1(M, setup, extra=extra)
    s2 = stage2(M, k_max=s1.bound, setup=setup, extra=extra)
    s3 = stage3(M, k_max=s1.bound + s2.bound, s_max=s2.bound, setup=setup,
                workers=workers, extra=extra)
    j = first_convergent_exceeding(setup.cf, 6 * M)
    return ReductionCertificate(M, digits, j, setup.cf.convergents[j], s1, s2, s3)
