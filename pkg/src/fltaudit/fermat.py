"""Brute-force scanner for x^n + y^n = z^n over bounded bases.

A sanity oracle: for n = 2 it must find the classical triples, for n >= 3 it
must come back empty on any desk-scale box.
"""

from __future__ import annotations

from math import gcd

from .ints import exact_nth_root

__all__ = ["primitive_square_triples", "scan_power_equation"]


def scan_power_equation(base_max: int, n: int) -> list[tuple[int, int, int]]:
    """All (x, y, z) with 1 <= x <= y <= base_max and x^n + y^n = z^n.

    z is recovered as the exact n-th root of x^n + y^n, so no separate bound
    on z is needed.
    """
    if base_max < 1:
        raise ValueError(f"base_max must be >= 1, got {base_max}")
    if n < 2:
        raise ValueError(f"exponent must be >= 2, got {n}")
    solutions: list[tuple[int, int, int]] = []
    powers = [0] + [v**n for v in range(1, base_max + 1)]
    for x in range(1, base_max + 1):
        for y in range(x, base_max + 1):
            z = exact_nth_root(powers[x] + powers[y], n)
            if z is not None:
                solutions.append((x, y, z))
    return solutions


def primitive_square_triples(base_max: int) -> list[tuple[int, int, int]]:
    """Solutions of x^2 + y^2 = z^2 with x <= y <= base_max and gcd(x, y, z) = 1."""
    return [
        (x, y, z)
        for x, y, z in scan_power_equation(base_max, 2)
        if gcd(gcd(x, y), z) == 1
    ]
