"""Audit of the square-triple parametrization claim.

The claim under audit: every integer solution of A^2 + B^2 = C^2 can be
written as A = p^2 - q^2, B = 2pq, C = p^2 + q^2 for integers p > q > 0.
That is true for primitive positive triples with even middle term (the
classical parametrization) but false in general, and the audit's job is to
surface the gap with concrete triples that admit no such (p, q).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, isqrt
from typing import Iterator

__all__ = [
    "PythTriple",
    "Representation",
    "audit_parametrization",
    "enumerate_triples",
    "euclid_primitive_triples",
    "is_pythagorean",
    "represent_triple",
]


@dataclass(frozen=True)
class PythTriple:
    """A triple with A^2 + B^2 = C^2 (checked at construction)."""

    A: int
    B: int
    C: int

    def __post_init__(self) -> None:
        if self.A * self.A + self.B * self.B != self.C * self.C:
            raise ValueError(f"({self.A}, {self.B}, {self.C}) is not Pythagorean")

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.A, self.B, self.C)


@dataclass(frozen=True)
class Representation:
    """A witness pair with p > q > 0."""

    p: int
    q: int

    def __post_init__(self) -> None:
        if not (self.p > self.q > 0):
            raise ValueError(f"representation needs p > q > 0, got p={self.p}, q={self.q}")

    def triple(self) -> tuple[int, int, int]:
        return (
            self.p * self.p - self.q * self.q,
            2 * self.p * self.q,
            self.p * self.p + self.q * self.q,
        )


def is_pythagorean(a: int, b: int, c: int) -> bool:
    return a * a + b * b == c * c


def represent_triple(a: int, b: int, c: int) -> Representation | None:
    """Find (p, q) with p > q > 0 matching (a, b, c) exactly, or None.

    Exhausts 0 < q < p <= ceil(sqrt(|c|)) + 1, which is complete: any witness
    satisfies p^2 < p^2 + q^2 = c, so p <= sqrt(c) whenever one exists.
    """
    # A witness forces a = p^2 - q^2 > 0, b = 2pq positive and even, c >= 5.
    if a <= 0 or b <= 0 or b % 2 or c < 5:
        return None
    bound = isqrt(abs(c)) + 2
    for p in range(2, bound + 1):
        p2 = p * p
        for q in range(1, p):
            if p2 - q * q == a and 2 * p * q == b and p2 + q * q == c:
                return Representation(p=p, q=q)
    return None


def represent_triple_charitable(a: int, b: int, c: int) -> Representation | None:
    """Most charitable reading: try sign flips of a, b and the (a, b) swap."""
    for aa, bb in ((a, b), (b, a), (abs(a), abs(b)), (abs(b), abs(a))):
        found = represent_triple(aa, bb, abs(c))
        if found is not None:
            return found
    return None


def enumerate_triples(
    c_max: int,
    *,
    primitive_only: bool = False,
    even_b_only: bool = False,
    include_negatives: bool = False,
) -> list[tuple[int, int, int]]:
    """All ordered triples (a, b, c) with a^2 + b^2 = c^2 and 0 < c <= c_max.

    Direct double loop with exact arithmetic; a and b range over positive
    integers independently, so both (3, 4, 5) and (4, 3, 5) appear.  With
    ``include_negatives`` the sign variants of a and b are added as well.
    """
    if c_max < 5:
        raise ValueError(f"c_max must be >= 5, got {c_max}")
    found: list[tuple[int, int, int]] = []
    for c in range(5, c_max + 1):
        c2 = c * c
        for a in range(1, c):
            rest = c2 - a * a
            b = isqrt(rest)
            if b < 1 or b * b != rest:
                continue
            if primitive_only and gcd(gcd(a, b), c) != 1:
                continue
            if even_b_only and b % 2:
                continue
            found.append((a, b, c))
            if include_negatives:
                found.extend([(-a, b, c), (a, -b, c), (-a, -b, c)])
    found.sort()
    return found


def euclid_primitive_triples(c_max: int) -> Iterator[tuple[int, int, int]]:
    """Primitive triples (m^2 - n^2, 2mn, m^2 + n^2) with hypotenuse <= c_max.

    Independent generation route: m > n >= 1 coprime, opposite parity.  Every
    triple produced is primitive, positive and has even middle term.
    """
    m = 2
    while m * m + 1 <= c_max:
        for n in range(1, m):
            c = m * m + n * n
            if c > c_max:
                break
            if (m - n) % 2 == 0 or gcd(m, n) != 1:
                continue
            yield (m * m - n * n, 2 * m * n, c)
        m += 1


def audit_parametrization(
    c_max: int,
    *,
    primitive_only: bool = False,
    even_b_only: bool = False,
    include_negatives: bool = False,
    charitable: bool = False,
) -> list[PythTriple]:
    """Triples in range that admit no representation under the chosen reading.

    The default is the literal claim (exact match with p > q > 0); with
    ``charitable`` a triple only counts as a failure when no sign flip or
    swap of (a, b) is representable either.
    """
    represent = represent_triple_charitable if charitable else represent_triple
    failures = [
        PythTriple(a, b, c)
        for a, b, c in enumerate_triples(
            c_max,
            primitive_only=primitive_only,
            even_b_only=even_b_only,
            include_negatives=include_negatives,
        )
        if represent(a, b, c) is None
    ]
    return failures
