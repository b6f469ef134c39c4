"""Base-10 repdigits d * (10**l - 1) / 9."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError


@dataclass(frozen=True)
class Repdigit:
    digit: int
    length: int
    value: int


def repunit(length: int) -> int:
    return (10**length - 1) // 9


def make_repdigit(d: int, length: int) -> Repdigit:
    if not 1 <= d <= 9:
        raise DomainError(f"digit must be in 1..9, got {d}")
    if length < 1:
        raise DomainError(f"length must be >= 1, got {length}")
    return Repdigit(d, length, d * repunit(length))


def classify_repdigit(n: int) -> tuple[int, int] | None:
    """Return ``(d, l)`` when ``n`` is a repdigit, else ``None``."""
    if n < 1:
        return None
    s = str(n)
    if s.count(s[0]) != len(s):
        return None
    return int(s[0]), len(s)


def repdigits_up_to(max_length: int, min_length: int = 1) -> dict[int, tuple[int, int]]:
    """Map value -> (d, l) for every repdigit with ``min_length <= l <= max_length``."""
    return {
        d * repunit(length): (d, length)
        for length in range(min_length, max_length + 1)
        for d in range(1, 10)
    }
