import pytest
from hypothesis import given
from hypothesis import strategies as st

from padovan_repdigits.errors import DomainError
from padovan_repdigits.repdigit import classify_repdigit, make_repdigit, repdigits_up_to, repunit


@given(st.integers(min_value=1, max_value=9), st.integers(min_value=1, max_value=120))
def test_round_trip(d, length):
    r = make_repdigit(d, length)
    assert r.value == int(str(d) * length)
    assert classify_repdigit(r.value) == (d, length)


@given(st.integers(min_value=-10**6, max_value=10**30))
def test_classify_agrees_with_string_test(n):
    s = str(n)
    expected = (int(s[0]), len(s)) if n > 0 and len(set(s)) == 1 else None
    assert classify_repdigit(n) == expected


@pytest.mark.parametrize("d,length", [(0, 3), (10, 2), (3, 0)])
def test_invalid_inputs(d, length):
    with pytest.raises(DomainError):
        make_repdigit(d, length)


def test_examples():
    assert make_repdigit(7, 4).value == 7777
    assert classify_repdigit(7778) is None
    assert classify_repdigit(0) is None
    assert repunit(3) == 111


def test_table():
    t = repdigits_up_to(3, 2)
    assert len(t) == 18 and t[555] == (5, 3)
