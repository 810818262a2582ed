"""Exact sparse polynomial arithmetic in x, y, z over Python's big integers.

A polynomial is a finite map from exponent triples (ex, ey, ez) to nonzero
integer coefficients.  The representation is canonical: zero coefficients are
never stored, so two polynomials are equal exactly when their term maps are
equal.  All operations are pure and every value is immutable after
construction, which makes polynomials safe to share across worker processes.

The fixed monomial order is graded lexicographic with x > y > z: monomials
are compared first by total degree, then lexicographically on the exponent
triple.  The order determines the leading term used by exact division and the
canonical text rendering.
"""

from __future__ import annotations

from typing import Iterator, Mapping, NamedTuple, Union

__all__ = [
    "Monomial",
    "NotDivisible",
    "Polynomial",
    "X",
    "Y",
    "Z",
    "ONE",
    "ZERO",
]

_Exponents = tuple[int, int, int]


class Monomial(NamedTuple):
    """Exponent triple of the power product x^ex * y^ey * z^ez."""

    ex: int
    ey: int
    ez: int

    @property
    def degree(self) -> int:
        return self.ex + self.ey + self.ez


class NotDivisible(ArithmeticError):
    """Exact polynomial division failed: no polynomial quotient exists."""


def _grlex_key(m: _Exponents) -> tuple[int, _Exponents]:
    # Graded lex, x > y > z: total degree first, then the exponent triple.
    return (m[0] + m[1] + m[2], m)


class Polynomial:
    """Immutable sparse polynomial with arbitrary-precision integer coefficients."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[_Exponents, int] | None = None) -> None:
        clean: dict[_Exponents, int] = {}
        if terms:
            for mono, coeff in terms.items():
                if not isinstance(coeff, int):
                    raise TypeError(f"coefficient {coeff!r} is not an integer")
                tup = tuple(mono)
                if len(tup) != 3 or any(not isinstance(e, int) or e < 0 for e in tup):
                    raise ValueError(f"bad exponent triple {mono!r}")
                if coeff:
                    key = (tup[0], tup[1], tup[2])
                    merged = clean.get(key, 0) + coeff
                    if merged:
                        clean[key] = merged
                    else:
                        clean.pop(key, None)
        self._terms = clean

    @classmethod
    def _from_canonical(cls, terms: dict[_Exponents, int]) -> "Polynomial":
        # Internal fast path: `terms` must already be canonical.
        poly = cls.__new__(cls)
        poly._terms = terms
        return poly

    # ------------------------------------------------------------------
    # Constructors

    @classmethod
    def zero(cls) -> "Polynomial":
        return cls._from_canonical({})

    @classmethod
    def one(cls) -> "Polynomial":
        return cls.constant(1)

    @classmethod
    def constant(cls, value: int) -> "Polynomial":
        if not isinstance(value, int):
            raise TypeError(f"constant must be an integer, got {value!r}")
        return cls._from_canonical({(0, 0, 0): value} if value else {})

    @classmethod
    def variable(cls, name: str) -> "Polynomial":
        try:
            idx = "xyz".index(name)
        except ValueError:
            raise ValueError(f"unknown variable {name!r}, expected x, y or z") from None
        exps = [0, 0, 0]
        exps[idx] = 1
        return cls._from_canonical({(exps[0], exps[1], exps[2]): 1})

    @classmethod
    def term(cls, coeff: int, ex: int, ey: int, ez: int) -> "Polynomial":
        return cls({(ex, ey, ez): coeff})

    # ------------------------------------------------------------------
    # Inspection

    @property
    def is_zero(self) -> bool:
        return not self._terms

    @property
    def term_count(self) -> int:
        return len(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def terms(self) -> Iterator[tuple[Monomial, int]]:
        """Iterate (monomial, coefficient) pairs in unspecified order."""
        for mono, coeff in self._terms.items():
            yield Monomial(*mono), coeff

    def sorted_terms(self) -> list[tuple[Monomial, int]]:
        """Terms in decreasing graded-lex order (the canonical order)."""
        return [
            (Monomial(*mono), self._terms[mono])
            for mono in sorted(self._terms, key=_grlex_key, reverse=True)
        ]

    def coefficient(self, ex: int, ey: int, ez: int) -> int:
        return self._terms.get((ex, ey, ez), 0)

    def total_degree(self) -> int:
        """Maximum total degree of any term; -1 for the zero polynomial."""
        if not self._terms:
            return -1
        return max(m[0] + m[1] + m[2] for m in self._terms)

    def leading_term(self) -> tuple[Monomial, int]:
        """Largest term under graded lex; raises ValueError on zero."""
        if not self._terms:
            raise ValueError("the zero polynomial has no leading term")
        mono = max(self._terms, key=_grlex_key)
        return Monomial(*mono), self._terms[mono]

    # ------------------------------------------------------------------
    # Ring operations

    def __add__(self, other: Union["Polynomial", int]) -> "Polynomial":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not self._terms:
            return other
        if not other._terms:
            return self
        out = dict(self._terms)
        for mono, coeff in other._terms.items():
            merged = out.get(mono, 0) + coeff
            if merged:
                out[mono] = merged
            else:
                out.pop(mono, None)
        return Polynomial._from_canonical(out)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial._from_canonical({m: -c for m, c in self._terms.items()})

    def __sub__(self, other: Union["Polynomial", int]) -> "Polynomial":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: int) -> "Polynomial":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other: Union["Polynomial", int]) -> "Polynomial":
        if isinstance(other, int):
            if other == 0:
                return Polynomial._from_canonical({})
            return Polynomial._from_canonical(
                {m: c * other for m, c in self._terms.items()}
            )
        if not isinstance(other, Polynomial):
            return NotImplemented
        a, b = self._terms, other._terms
        if not a or not b:
            return Polynomial._from_canonical({})
        if len(a) > len(b):
            a, b = b, a
        out: dict[_Exponents, int] = {}
        for (ax, ay, az), ac in a.items():
            for (bx, by, bz), bc in b.items():
                key = (ax + bx, ay + by, az + bz)
                out[key] = out.get(key, 0) + ac * bc
        return Polynomial._from_canonical({m: c for m, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "Polynomial":
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            raise ValueError(f"polynomial exponent must be >= 0, got {exponent}")
        result = Polynomial.one()
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    # ------------------------------------------------------------------
    # Evaluation and division

    def evaluate(self, x: int, y: int, z: int) -> int:
        """Exact value at an integer point."""
        if not self._terms:
            return 0
        xp = _powers(x, max(m[0] for m in self._terms))
        yp = _powers(y, max(m[1] for m in self._terms))
        zp = _powers(z, max(m[2] for m in self._terms))
        total = 0
        for (ex, ey, ez), coeff in self._terms.items():
            total += coeff * xp[ex] * yp[ey] * zp[ez]
        return total

    def div_exact(self, divisor: "Polynomial") -> "Polynomial":
        """Quotient q with self == q * divisor, else raise NotDivisible.

        Reduction by the divisor's graded-lex leading term.  Over the
        integers this decides exact divisibility for any nonzero divisor:
        if the remainder is a multiple of the divisor, its leading term is
        divisible by the divisor's leading term (monomial and coefficient
        alike), so the greedy reduction can only fail on non-multiples.
        """
        if not isinstance(divisor, Polynomial):
            raise TypeError(f"divisor must be a Polynomial, got {divisor!r}")
        if divisor.is_zero:
            raise ValueError("division by the zero polynomial")
        lead = max(divisor._terms, key=_grlex_key)
        lead_coeff = divisor._terms[lead]
        dx, dy, dz = lead
        dterms = list(divisor._terms.items())
        rem = dict(self._terms)
        quo: dict[_Exponents, int] = {}
        while rem:
            rmono = max(rem, key=_grlex_key)
            rcoeff = rem[rmono]
            qx, qy, qz = rmono[0] - dx, rmono[1] - dy, rmono[2] - dz
            if qx < 0 or qy < 0 or qz < 0:
                raise NotDivisible(
                    f"leading monomial x^{rmono[0]}*y^{rmono[1]}*z^{rmono[2]} "
                    f"is not divisible by the divisor's leading monomial"
                )
            qcoeff, residue = divmod(rcoeff, lead_coeff)
            if residue:
                raise NotDivisible(
                    f"leading coefficient {rcoeff} is not an integer multiple "
                    f"of {lead_coeff}"
                )
            quo[(qx, qy, qz)] = qcoeff
            for (tx, ty, tz), tcoeff in dterms:
                key = (qx + tx, qy + ty, qz + tz)
                merged = rem.get(key, 0) - qcoeff * tcoeff
                if merged:
                    rem[key] = merged
                else:
                    rem.pop(key, None)
        return Polynomial._from_canonical(quo)

    # ------------------------------------------------------------------
    # Comparison and rendering

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Polynomial):
            return self._terms == other._terms
        if isinstance(other, int):
            return self._terms == ({(0, 0, 0): other} if other else {})
        return NotImplemented

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts: list[str] = []
        for mono in sorted(self._terms, key=_grlex_key, reverse=True):
            coeff = self._terms[mono]
            body = _render_monomial(mono)
            magnitude = abs(coeff)
            if body and magnitude == 1:
                piece = body
            elif body:
                piece = f"{magnitude}*{body}"
            else:
                piece = str(magnitude)
            if not parts:
                parts.append(piece if coeff > 0 else f"-{piece}")
            else:
                parts.append(f"+ {piece}" if coeff > 0 else f"- {piece}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"Polynomial({self})"


def _coerce(value: Union[Polynomial, int]) -> Polynomial:
    if isinstance(value, Polynomial):
        return value
    if isinstance(value, int):
        return Polynomial.constant(value)
    return NotImplemented  # type: ignore[return-value]


def _powers(base: int, upto: int) -> list[int]:
    vals = [1] * (upto + 1)
    for i in range(1, upto + 1):
        vals[i] = vals[i - 1] * base
    return vals


def _render_monomial(mono: _Exponents) -> str:
    bits = []
    for name, e in zip("xyz", mono):
        if e == 1:
            bits.append(name)
        elif e > 1:
            bits.append(f"{name}^{e}")
    return "*".join(bits)


X = Polynomial.variable("x")
Y = Polynomial.variable("y")
Z = Polynomial.variable("z")
ONE = Polynomial.one()
ZERO = Polynomial.zero()
