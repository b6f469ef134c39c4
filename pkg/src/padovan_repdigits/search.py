"""Exhaustive search for repdigits that are sums of three Padovan numbers."""

from __future__ import annotations

import math
from collections import defaultdict
from dataclasses import dataclass, field

from .errors import DomainError
from .padovan import canonical_index, padovan_list
from .repdigit import classify_repdigit, make_repdigit, repunit

# log(alpha)/log(10) = 0.12212...; interval kept wide enough for both roundings
LOG10_ALPHA_LOWER = 0.122123
LOG10_ALPHA_UPPER = 0.122124

#: The complete list of repdigit solutions.
KNOWN_REPDIGITS = frozenset(
    [11, 22, 33, 44, 55, 66, 77, 88, 99, 111, 222, 333, 444, 555, 666, 888, 1111, 3333, 7777]
)

EXCLUDED_INDICES = frozenset({1, 2, 4})


@dataclass(frozen=True, order=True)
class Solution:
    N: int
    n1: int
    n2: int
    n3: int
    d: int
    ell: int


@dataclass
class RepresentationSet:
    n_max: int
    ell_max: int
    by_value: dict[int, list[Solution]] = field(default_factory=dict)

    @property
    def values(self) -> set[int]:
        return set(self.by_value)

    def solutions(self) -> list[Solution]:
        return sorted(s for group in self.by_value.values() for s in group)

    def __len__(self):
        return sum(len(g) for g in self.by_value.values())

    def __eq__(self, other):
        if not isinstance(other, RepresentationSet):
            return NotImplemented
        return self.solutions() == other.solutions()


def ell_window(n1: int) -> tuple[int, int]:
    """Range of repdigit lengths compatible with largest index ``n1``.

    From alpha**(n1-3) <= N <= 10**l and 10**(l-1) <= N < alpha**(n1+3):
    (n1-3) log(alpha)/log(10) <= l <= 1 + (n1+3) log(alpha)/log(10).
    The upper end is widened to also cover the looser (n1+8)/5 envelope.
    """
    if n1 < 1:
        raise DomainError("n1 must be >= 1")
    lo = math.floor((n1 - 3) * LOG10_ALPHA_LOWER)
    hi = math.ceil(1 + (n1 + 3) * LOG10_ALPHA_UPPER)
    hi = max(hi, math.ceil((n1 + 8) / 5))
    return lo, hi


def _group(solutions, n_max, ell_max) -> RepresentationSet:
    groups = defaultdict(list)
    for s in sorted(set(solutions)):
        groups[s.N].append(s)
    return RepresentationSet(n_max, ell_max, dict(sorted(groups.items())))


def enumerate_solutions(n_max: int = 500, ell_max: int = 100) -> RepresentationSet:
    """All (N, n1, n2, n3, d, l) with n_max >= n1 >= n2 >= n3, indices outside
    {1, 2, 4}, and 2 <= l <= ell_max.

    The third summand is found by exact lookup: for each pair (n1, n2) and each
    candidate repdigit in the length window of n1, ``R - P_n1 - P_n2`` must be a
    Padovan value with index at most n2.
    """
    if n_max < 5:
        raise DomainError("n_max must be >= 5")
    if ell_max < 2:
        raise DomainError("ell_max must be >= 2")
    P = padovan_list(n_max)
    indices = [n for n in range(n_max + 1) if n not in EXCLUDED_INDICES]
    # P is injective on these indices (P_0 = 0, P_3 = 1, then strictly increasing)
    index_of = {P[n]: n for n in indices}
    found = []
    for i, n1 in enumerate(indices):
        if n1 == 0:
            continue
        lo, hi = ell_window(n1)
        lengths = range(max(lo, 2), min(hi, ell_max) + 1)
        targets = [(d, length, d * repunit(length)) for length in lengths for d in range(1, 10)]
        p1 = P[n1]
        for n2 in indices[: i + 1]:
            rest = p1 + P[n2]
            for d, length, value in targets:
                n3 = index_of.get(value - rest)
                if n3 is not None and n3 <= n2:
                    found.append(Solution(value, n1, n2, n3, d, length))
    return _group(found, n_max, ell_max)


def naive_solutions(n_max: int, ell_max: int) -> RepresentationSet:
    """Brute force over every index triple, then canonicalized; the search oracle."""
    P = padovan_list(n_max)
    found = []
    for n1 in range(n_max + 1):
        for n2 in range(n1 + 1):
            for n3 in range(n2 + 1):
                N = P[n1] + P[n2] + P[n3]
                rd = classify_repdigit(N)
                if rd is None or not 2 <= rd[1] <= ell_max:
                    continue
                m1, m2, m3 = sorted(map(canonical_index, (n1, n2, n3)), reverse=True)
                found.append(Solution(N, m1, m2, m3, *rd))
    return _group(found, n_max, ell_max)


def verify_solution(s: Solution) -> bool:
    """Exact check of every Solution invariant."""
    if not (s.n1 >= s.n2 >= s.n3 >= 0):
        return False
    if {s.n1, s.n2, s.n3} & EXCLUDED_INDICES:
        return False
    if not (1 <= s.d <= 9 and s.ell >= 2):
        return False
    P = padovan_list(s.n1)
    return P[s.n1] + P[s.n2] + P[s.n3] == s.N == make_repdigit(s.d, s.ell).value
