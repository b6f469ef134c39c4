import pytest
from flint import arb
from hypothesis import given, settings
from hypothesis import strategies as st

import oracle
from padovan_repdigits.errors import DomainError, UnresolvedException
from padovan_repdigits.numerics import certify_stable, working_precision
from padovan_repdigits.reduction import (
    PUBLISHED_M,
    ReductionProblem,
    Status,
    a_coefficient,
    davenport_reduce,
    degenerate_identity_with_extra_alpha,
    reduction_setup,
    stage1,
    stage2,
    stage3,
    verify_degenerate_shift_identity,
)

Q105 = 21695574963444524513646677911090250505443859600601

# Six integer-shift cases of the third stage: (d, k, s) -> mu.
STAGE3_INTEGER_SHIFTS = {
    (9, 14, 1): -12, (9, 7, 2): -6, (9, 3, 3): -4,
    (9, 16, 4): -14, (9, 10, 6): -9, (9, 9, 8): -9,
}


def _problem(setup, stage, d, *powers, M=PUBLISHED_M):
    return ReductionProblem(setup.tau, setup.mu(d, *powers), a_coefficient(setup, stage),
                            setup.roots.alpha, M)


def test_problem_validation(setup400):
    with pytest.raises(DomainError):
        ReductionProblem(setup400.tau, arb(0), 0, setup400.roots.alpha, 10)
    with pytest.raises(DomainError):
        ReductionProblem(setup400.tau, arb(0), 5, arb(1), 10)
    with pytest.raises(DomainError):
        ReductionProblem(setup400.tau, arb(0), 5, setup400.roots.alpha, 0)


def test_a_coefficients(setup400):
    assert [a_coefficient(setup400, s) for s in (1, 2, 3)] == [36, 22, 36]


def test_single_case_matches_oracle(setup400):
    out = davenport_reduce(_problem(setup400, 1, 9), setup400.cf)
    assert out.status is Status.BOUNDED
    assert out.q_index == 105
    expected = oracle.epsilon(9, (), PUBLISHED_M, Q105)
    assert abs(float(out.epsilon.mid()) - float(expected)) < 1e-15
    assert out.w_bound == 433


def test_negative_epsilon_moves_to_next_convergent(setup400):
    out = davenport_reduce(_problem(setup400, 2, 7, 3), setup400.cf)
    assert out.status is Status.BOUNDED
    assert out.q_index == 106
    assert out.w_bound == 422
    assert float(oracle.epsilon(7, (3,), PUBLISHED_M, Q105)) < 0


def test_integer_shift_never_reduces(setup400):
    out = davenport_reduce(_problem(setup400, 2, 9, 11), setup400.cf)
    assert out.status is Status.EPSILON_NONPOSITIVE


def test_without_spare_convergents_the_sweep_fails_closed(setup400):
    with pytest.raises(UnresolvedException):
        stage2(PUBLISHED_M, k_max=10, setup=setup400, extra=0)


@settings(max_examples=12, deadline=None)
@given(st.integers(min_value=1, max_value=9), st.integers(min_value=0, max_value=433))
def test_epsilon_stable_under_doubled_precision(d, k):
    lo, hi = reduction_setup(400), reduction_setup(800)
    with working_precision(800):
        e_lo = davenport_reduce(_problem(lo, 2, d, k), lo.cf).epsilon
        e_hi = davenport_reduce(_problem(hi, 2, d, k), hi.cf).epsilon
        assert certify_stable(e_lo, e_hi, arb(10) ** -300)


def test_degenerate_shift_identity(roots400, coeffs400, setup400):
    assert verify_degenerate_shift_identity(roots400, coeffs400)
    with working_precision(400):
        assert abs(setup400.mu(9, 11) + 9) < arb(10) ** -390
    bad = degenerate_identity_with_extra_alpha(roots400)
    assert abs(float(bad.mid()) - 0.0195107) < 1e-6


def test_stage1(stages_published_M):
    s1 = stages_published_M[0]
    assert s1.bound == 433 and s1.cases == 9
    assert s1.min_epsilon_at == (9,)
    assert abs(s1.min_epsilon_value - 0.0129486557610) < 1e-12


def test_stage2(stages_published_M):
    s2 = stages_published_M[1]
    assert s2.cases == 9 * 434
    assert s2.main_bound == 447
    assert [(e.params, e.mu_integer) for e in s2.exceptions] == [((9, 11), -9)]
    assert s2.homogeneous_bound == 430
    assert s2.exceptions[0].dna_threshold == 411
    assert s2.min_epsilon_at == (7, 194)
    expected = float(oracle.epsilon(7, (194,), PUBLISHED_M, Q105))
    assert s2.min_epsilon_value == pytest.approx(expected, rel=1e-12)


def test_stage2_published_minimum_is_attained_elsewhere():
    assert float(oracle.epsilon(2, (39,), PUBLISHED_M, Q105)) == pytest.approx(0.000134829, rel=1e-5)


def test_stage3(stages_published_M):
    s3 = stages_published_M[2]
    assert s3.bound == 476
    assert s3.cases == 9 * sum(881 - s for s in range(448))
    assert {e.params: e.mu_integer for e in s3.exceptions} == STAGE3_INTEGER_SHIFTS
    assert s3.homogeneous_bound == 432
    assert s3.min_epsilon_at == (7, 185, 118)
    expected = float(oracle.epsilon(7, (185, 118), PUBLISHED_M, Q105))
    assert s3.min_epsilon_value == pytest.approx(expected, rel=1e-12)


@pytest.mark.parametrize("params,mu", sorted(STAGE3_INTEGER_SHIFTS.items()))
def test_stage3_integer_shifts_are_exact(setup400, params, mu):
    with working_precision(400):
        assert abs(setup400.mu(*params) - mu) < arb(10) ** -390


def test_bounds_monotone_in_M(setup400, stages_published_M):
    rows = []
    for M in (10**6, 10**20):
        s1 = stage1(M, setup400)
        s2 = stage2(M, k_max=s1.bound, setup=setup400)
        rows.append((s1.bound, s2.bound))
    rows.append(tuple(s.bound for s in stages_published_M[:2]))
    assert rows == sorted(rows)
    assert rows[0] == (85, 99) and rows[1] == (203, 215)


def test_small_M_closes(setup400):
    M = 10**6
    s1 = stage1(M, setup400)
    s2 = stage2(M, k_max=s1.bound, setup=setup400)
    s3 = stage3(M, k_max=s1.bound + s2.bound, s_max=s2.bound, setup=setup400)
    assert s3.bound == 126


def test_parallel_sweep_matches_serial(setup400):
    a = stage3(k_max=60, s_max=30, setup=setup400, workers=1)
    b = stage3(k_max=60, s_max=30, setup=setup400, workers=3)
    assert (a.cases, a.main_bound, a.max_bound_at, a.min_epsilon, a.min_epsilon_at, a.escalated) == \
           (b.cases, b.main_bound, b.max_bound_at, b.min_epsilon, b.min_epsilon_at, b.escalated)
    assert a.exceptions == b.exceptions
