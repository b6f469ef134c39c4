import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from padovan_repdigits.errors import DomainError
from padovan_repdigits.padovan import padovan
from padovan_repdigits.search import (
    KNOWN_REPDIGITS,
    Solution,
    ell_window,
    enumerate_solutions,
    naive_solutions,
    verify_solution,
)


@pytest.fixture(scope="module")
def up_to_120():
    return enumerate_solutions(120, 30)


def test_small_range_has_no_solutions():
    # P_0..P_5 are 0, 1, 1, 1, 2, 2: the largest sum is 6
    assert len(enumerate_solutions(5, 2)) == 0


def test_first_value_appears_at_index_8():
    rs = enumerate_solutions(8, 2)
    assert rs.values == {11}
    assert [(s.n1, s.n2, s.n3) for s in rs.solutions()] == [(7, 7, 6), (8, 6, 6), (8, 7, 5), (8, 8, 3)]


def test_known_values_within_120(up_to_120):
    assert up_to_120.values == set(KNOWN_REPDIGITS)
    assert len(up_to_120) == 85


def test_every_solution_verifies(up_to_120):
    assert all(verify_solution(s) for s in up_to_120.solutions())


def test_largest_solution(up_to_120):
    assert Solution(7777, 34, 15, 3, 7, 4) in up_to_120.solutions()
    assert max(s.n1 for s in up_to_120.solutions()) == 34


def test_excluded_indices_never_used(up_to_120):
    for s in up_to_120.solutions():
        assert not {s.n1, s.n2, s.n3} & {1, 2, 4}


def test_verify_rejects_bad_tuples():
    assert not verify_solution(Solution(11, 8, 8, 2, 1, 2))  # index 2 is excluded
    assert not verify_solution(Solution(22, 8, 8, 3, 2, 2))  # wrong sum
    assert not verify_solution(Solution(11, 6, 8, 8, 1, 2))  # unordered


@settings(max_examples=15, deadline=None)
@given(st.integers(min_value=5, max_value=45), st.integers(min_value=2, max_value=8))
def test_pruned_search_equals_brute_force(n_max, ell_max):
    assert enumerate_solutions(n_max, ell_max) == naive_solutions(n_max, ell_max)


@given(st.integers(min_value=3, max_value=3000), st.integers(min_value=0, max_value=3000),
       st.integers(min_value=0, max_value=3000))
def test_window_contains_length_of_any_sum(n1, n2, n3):
    n2, n3 = min(n2, n1), min(n3, n1)
    N = padovan(n1) + padovan(n2) + padovan(n3)
    lo, hi = ell_window(n1)
    assert lo <= len(str(N)) <= hi


def test_window_rejects_bad_index():
    with pytest.raises(DomainError):
        ell_window(0)
