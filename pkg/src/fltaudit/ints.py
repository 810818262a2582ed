"""Shared exact-integer helpers: square tests, roots, divisibility."""

from __future__ import annotations

from math import isqrt

# Quadratic residues used by the perfect-square pre-filter.  Any integer
# square is congruent to one of these mod 16 and mod 9, so membership is a
# necessary (never sufficient) condition and the filter is sound.
SQUARES_MOD_16 = frozenset({0, 1, 4, 9})
SQUARES_MOD_9 = frozenset({0, 1, 4, 7})


def passes_square_filter(value: int) -> bool:
    """Cheap necessary condition for ``value`` being a perfect square."""
    return value >= 0 and value % 16 in SQUARES_MOD_16 and value % 9 in SQUARES_MOD_9


def exact_sqrt(value: int) -> int | None:
    """Nonnegative integer square root of ``value``, or None if not a square."""
    if value < 0:
        return None
    root = isqrt(value)
    return root if root * root == value else None


def is_perfect_square(value: int) -> bool:
    return exact_sqrt(value) is not None


def int_nth_root(value: int, degree: int) -> int:
    """Floor of the ``degree``-th root of a nonnegative integer."""
    if degree < 1:
        raise ValueError(f"root degree must be >= 1, got {degree}")
    if value < 0:
        raise ValueError(f"negative radicand {value}")
    if value == 0:
        return 0
    if degree == 1:
        return value
    if degree == 2:
        return isqrt(value)
    # Float seed, then exact integer correction in both directions.
    root = int(round(value ** (1.0 / degree)))
    while root > 1 and root**degree > value:
        root -= 1
    while (root + 1) ** degree <= value:
        root += 1
    return root


def exact_nth_root(value: int, degree: int) -> int | None:
    """Integer ``r`` with ``r**degree == value``, or None (value >= 0)."""
    root = int_nth_root(value, degree)
    return root if root**degree == value else None


def divides(divisor: int, value: int) -> bool:
    """Divisibility over the integers; 0 divides only 0."""
    if divisor == 0:
        return value == 0
    return value % divisor == 0


def pairwise_distinct(*values: int) -> bool:
    return len(set(values)) == len(values)
