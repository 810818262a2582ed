"""Construction and exact verification of the squared-triple identity.

For an integer exponent n >= 3, six linear forms in x, y, z are fixed:

    r = x - y    s = y + z    t = z + x
    u = x + y + z    v = y - z - x    w = x - y - z

and three polynomials are built from them:

    A = r^2 (u^4 - 1) (xy)^(n-2) - s^2 (v^4 - 1) (yz)^(n-2) - t^2 (w^4 - 1) (zx)^(n-2)
    B = 2 (ru)^2 (xy)^(n-2) - 2 (sv)^2 (yz)^(n-2) - 2 (tw)^2 (zx)^(n-2)
    C = r^2 (u^4 + 1) (xy)^(n-2) - s^2 (v^4 + 1) (yz)^(n-2) - t^2 (w^4 + 1) (zx)^(n-2)

The claimed identity under audit is

    (8rst)^2 (xyz)^(n-2) (x^n + y^n - z^n) = A^2 + B^2 - C^2.

This module builds both sides by exact expansion, checks the identity
symbolically and numerically, derives the reduced system

    Q = (C - A) / 2    M = B / 2    P = (C + A) / 2

from its direct closed forms, and checks the consistency identity
M^2 - P*Q = (4rst)^2 (xyz)^(n-2) (x^n + y^n - z^n), which is what makes the
extraction of integers (p, q) with q^2 = Q, pq = M, p^2 = P coherent exactly
on the Fermat variety x^n + y^n = z^n.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from functools import lru_cache
from random import Random
from typing import Union

from .poly import ONE, Polynomial, NotDivisible, X, Y, Z

__all__ = [
    "AbcTriple",
    "ConsistencyResult",
    "DerivationError",
    "DerivedSystem",
    "EvalPoint",
    "LemmaBindings",
    "build_lemma_terms",
    "consistency_residual",
    "derive_system",
    "fermat_poly",
    "identity_record",
    "lhs_poly",
    "numeric_cross_check",
    "sample_points",
    "verify_identity",
]

EvalPoint = tuple[int, int, int]

Scalar = Union[Polynomial, int]


class DerivationError(Exception):
    """A halving step or a dual-construction cross-check failed.

    This signals either an implementation bug or a genuine defect in the
    audited derivation; callers must surface it, never swallow it.
    """


@dataclass(frozen=True)
class LemmaBindings:
    """The six linear forms, either as polynomials or bound to a point."""

    r: Scalar
    s: Scalar
    t: Scalar
    u: Scalar
    v: Scalar
    w: Scalar

    @classmethod
    def symbolic(cls) -> "LemmaBindings":
        return cls(r=X - Y, s=Y + Z, t=Z + X, u=X + Y + Z, v=Y - Z - X, w=X - Y - Z)

    @classmethod
    def at_point(cls, x: int, y: int, z: int) -> "LemmaBindings":
        return cls(r=x - y, s=y + z, t=z + x, u=x + y + z, v=y - z - x, w=x - y - z)


@dataclass(frozen=True)
class AbcTriple:
    """The triple (A, B, C) for a fixed exponent n."""

    A: Polynomial
    B: Polynomial
    C: Polynomial
    n: int

    def evaluate(self, x: int, y: int, z: int) -> tuple[int, int, int]:
        return (
            self.A.evaluate(x, y, z),
            self.B.evaluate(x, y, z),
            self.C.evaluate(x, y, z),
        )


@dataclass(frozen=True)
class DerivedSystem:
    """The halved combinations Q = (C-A)/2, M = B/2, P = (C+A)/2 at exponent n.

    Q is the expression whose value must be q^2, M the one for pq, and P the
    one for p^2.  Instances are only produced by derive_system, which builds
    each member from its direct closed form and independently re-checks it
    against the halved combination of (A, B, C).
    """

    Q: Polynomial
    M: Polynomial
    P: Polynomial
    n: int

    def evaluate(self, x: int, y: int, z: int) -> tuple[int, int, int]:
        return (
            self.Q.evaluate(x, y, z),
            self.M.evaluate(x, y, z),
            self.P.evaluate(x, y, z),
        )


@dataclass(frozen=True)
class ConsistencyResult:
    """Outcome of the consistency check M^2 - P*Q on the Fermat factor."""

    residual: Polynomial
    matches_product_form: bool
    fermat_quotient: Polynomial | None
    n: int

    @property
    def holds(self) -> bool:
        return self.matches_product_form and self.fermat_quotient is not None


def _require_exponent(n: int) -> None:
    if not isinstance(n, int) or n < 3:
        raise ValueError(f"exponent must be an integer >= 3, got {n!r}")


@lru_cache(maxsize=64)
def fermat_poly(n: int) -> Polynomial:
    """x^n + y^n - z^n."""
    _require_exponent(n)
    return X**n + Y**n - Z**n


@lru_cache(maxsize=64)
def build_lemma_terms(n: int) -> AbcTriple:
    """Expand A, B, C for the given exponent."""
    _require_exponent(n)
    b = LemmaBindings.symbolic()
    xy = (X * Y) ** (n - 2)
    yz = (Y * Z) ** (n - 2)
    zx = (Z * X) ** (n - 2)
    u4 = b.u**4
    v4 = b.v**4
    w4 = b.w**4
    a_poly = b.r**2 * (u4 - ONE) * xy - b.s**2 * (v4 - ONE) * yz - b.t**2 * (w4 - ONE) * zx
    b_poly = 2 * ((b.r * b.u) ** 2 * xy - (b.s * b.v) ** 2 * yz - (b.t * b.w) ** 2 * zx)
    c_poly = b.r**2 * (u4 + ONE) * xy - b.s**2 * (v4 + ONE) * yz - b.t**2 * (w4 + ONE) * zx
    return AbcTriple(A=a_poly, B=b_poly, C=c_poly, n=n)


@lru_cache(maxsize=64)
def lhs_poly(n: int) -> Polynomial:
    """Fully expanded (8rst)^2 (xyz)^(n-2) (x^n + y^n - z^n)."""
    _require_exponent(n)
    b = LemmaBindings.symbolic()
    return (8 * b.r * b.s * b.t) ** 2 * (X * Y * Z) ** (n - 2) * fermat_poly(n)


def verify_identity(n: int) -> Polynomial:
    """Residual lhs - (A^2 + B^2 - C^2); the zero polynomial iff the identity holds."""
    abc = build_lemma_terms(n)
    return lhs_poly(n) - (abc.A**2 + abc.B**2 - abc.C**2)


def numeric_cross_check(n: int, point: EvalPoint) -> tuple[int, int]:
    """Both sides of the identity at an integer point.

    The left side is computed by direct integer arithmetic on the point, the
    right side by evaluating the expanded polynomials A, B, C, so the two
    values follow independent routes and must agree exactly.
    """
    _require_exponent(n)
    x, y, z = point
    b = LemmaBindings.at_point(x, y, z)
    lhs = (8 * b.r * b.s * b.t) ** 2 * (x * y * z) ** (n - 2) * (x**n + y**n - z**n)
    av, bv, cv = build_lemma_terms(n).evaluate(x, y, z)
    return lhs, av * av + bv * bv - cv * cv


def _halved(poly: Polynomial, what: str) -> Polynomial:
    """Divide every coefficient by 2, refusing if any is odd."""
    halved: dict[tuple[int, int, int], int] = {}
    for mono, coeff in poly.terms():
        if coeff % 2:
            raise DerivationError(
                f"halving {what}: coefficient {coeff} of "
                f"x^{mono.ex}*y^{mono.ey}*z^{mono.ez} is odd"
            )
        halved[(mono.ex, mono.ey, mono.ez)] = coeff // 2
    return Polynomial(halved)


@lru_cache(maxsize=64)
def derive_system(n: int) -> DerivedSystem:
    """Build Q, M, P from their closed forms and re-verify the halving route.

    Each member is constructed twice: from its direct formula, e.g.
    Q = r^2 (xy)^(n-2) - s^2 (yz)^(n-2) - t^2 (zx)^(n-2), and from the halved
    combination of (A, B, C).  Any odd coefficient in a combination, or any
    disagreement between the two routes, raises DerivationError.
    """
    _require_exponent(n)
    b = LemmaBindings.symbolic()
    xy = (X * Y) ** (n - 2)
    yz = (Y * Z) ** (n - 2)
    zx = (Z * X) ** (n - 2)
    q_poly = b.r**2 * xy - b.s**2 * yz - b.t**2 * zx
    m_poly = (b.r * b.u) ** 2 * xy - (b.s * b.v) ** 2 * yz - (b.t * b.w) ** 2 * zx
    p_poly = (b.r * b.u**2) ** 2 * xy - (b.s * b.v**2) ** 2 * yz - (b.t * b.w**2) ** 2 * zx

    abc = build_lemma_terms(n)
    checks = [
        ("(C - A)/2 vs Q", _halved(abc.C - abc.A, "C - A"), q_poly),
        ("B/2 vs M", _halved(abc.B, "B"), m_poly),
        ("(C + A)/2 vs P", _halved(abc.C + abc.A, "C + A"), p_poly),
    ]
    for label, via_halving, direct in checks:
        if via_halving != direct:
            diff = via_halving - direct
            raise DerivationError(
                f"dual construction disagrees for {label} at n={n}; "
                f"difference has {diff.term_count} terms"
            )
    return DerivedSystem(Q=q_poly, M=m_poly, P=p_poly, n=n)


def consistency_residual(n: int) -> ConsistencyResult:
    """Check M^2 - P*Q = (4rst)^2 (xyz)^(n-2) (x^n + y^n - z^n).

    Returns the residual M^2 - P*Q together with two witnesses: whether it
    equals the expected product form by expansion, and the exact quotient of
    the residual by x^n + y^n - z^n (None if that division fails).
    """
    system = derive_system(n)
    residual = system.M**2 - system.P * system.Q
    b = LemmaBindings.symbolic()
    expected = (4 * b.r * b.s * b.t) ** 2 * (X * Y * Z) ** (n - 2) * fermat_poly(n)
    try:
        quotient = residual.div_exact(fermat_poly(n))
    except NotDivisible:
        quotient = None
    return ConsistencyResult(
        residual=residual,
        matches_product_form=residual == expected,
        fermat_quotient=quotient,
        n=n,
    )


def sample_points(
    count: int, rng: Random, low: int = -50, high: int = 50
) -> list[EvalPoint]:
    """Uniform integer points in [low, high]^3 from the given generator."""
    if count < 0:
        raise ValueError(f"count must be >= 0, got {count}")
    return [
        (rng.randint(low, high), rng.randint(low, high), rng.randint(low, high))
        for _ in range(count)
    ]


def identity_record(
    n: int, *, points: int = 0, rng: Random | None = None, sabotage: bool = False
) -> dict:
    """One per-exponent verification record for reports.

    Runs the symbolic check and, when ``points`` > 0, a numeric cross-check
    on that many random points drawn from ``rng``.  ``sabotage`` is a
    negative control: it perturbs the residual by 1 so the verification must
    report a nonzero residual.
    """
    started = time.perf_counter()
    residual = verify_identity(n)
    if sabotage:
        residual = residual + ONE
    abc = build_lemma_terms(n)
    mismatches: list[list[int]] = []
    if points:
        if rng is None:
            raise ValueError("numeric cross-checks need a seeded random generator")
        for point in sample_points(points, rng):
            lhs, rhs = numeric_cross_check(n, point)
            if lhs != rhs:
                mismatches.append(list(point))
    return {
        "n": n,
        "residual_zero": residual.is_zero,
        "residual_terms": residual.term_count,
        "lhs_terms": lhs_poly(n).term_count,
        "abc_terms": {
            "A": abc.A.term_count,
            "B": abc.B.term_count,
            "C": abc.C.term_count,
        },
        "numeric_points": points,
        "numeric_mismatches": len(mismatches),
        "mismatch_points": mismatches[:10],
        "elapsed_s": round(time.perf_counter() - started, 6),
    }
