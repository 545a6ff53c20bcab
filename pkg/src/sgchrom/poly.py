"""Exact integer-coefficient univariate polynomials.

Coefficients are arbitrary-precision Python ints stored ascending by
power.  The zero polynomial has an empty coefficient tuple; every other
polynomial has a nonzero leading coefficient (canonical form).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .errors import InterpolationError


class Polynomial:
    """Immutable dense polynomial over the integers."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls) -> "Polynomial":
        return cls(())

    @classmethod
    def one(cls) -> "Polynomial":
        return cls((1,))

    @classmethod
    def constant(cls, c: int) -> "Polynomial":
        return cls((c,))

    @classmethod
    def variable(cls) -> "Polynomial":
        return cls((0, 1))

    @classmethod
    def monomial(cls, coeff: int, power: int) -> "Polynomial":
        if power < 0:
            raise ValueError("power must be nonnegative")
        return cls((0,) * power + (coeff,))

    # -- queries -------------------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial reported as -1."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading_coefficient(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def coefficient(self, power: int) -> int:
        if 0 <= power < len(self.coeffs):
            return self.coeffs[power]
        return 0

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, int):
            return self == Polynomial.constant(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"Polynomial({list(self.coeffs)!r})"

    # -- ring arithmetic -------------------------------------------------------

    @staticmethod
    def _coerce(value) -> "Polynomial":
        if isinstance(value, Polynomial):
            return value
        if isinstance(value, int):
            return Polynomial.constant(value)
        raise TypeError(f"cannot mix Polynomial with {type(value).__name__}")

    def __add__(self, other) -> "Polynomial":
        other = self._coerce(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Polynomial(out)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other) -> "Polynomial":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "Polynomial":
        return self._coerce(other) - self

    def __mul__(self, other) -> "Polynomial":
        other = self._coerce(other)
        if not self.coeffs or not other.coeffs:
            return Polynomial.zero()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "Polynomial":
        if exponent < 0:
            raise ValueError("exponent must be nonnegative")
        result = Polynomial.one()
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __divmod__(self, other) -> tuple["Polynomial", "Polynomial"]:
        """Long division; raises ValueError if a quotient step is non-integer."""
        other = self._coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        div = other.coeffs
        dn = len(div)
        if len(rem) < dn:
            return Polynomial.zero(), Polynomial(rem)
        q = [0] * (len(rem) - dn + 1)
        for i in range(len(q) - 1, -1, -1):
            lead = rem[i + dn - 1]
            if lead == 0:
                continue
            step, r = divmod(lead, div[-1])
            if r != 0:
                raise ValueError("division step is not exact over the integers")
            q[i] = step
            for j, d in enumerate(div):
                rem[i + j] -= step * d
        return Polynomial(q), Polynomial(rem)

    def exact_div(self, other) -> "Polynomial":
        """Quotient by an exact divisor; raises ValueError on any remainder."""
        q, r = divmod(self, other)
        if not r.is_zero():
            raise ValueError("polynomial division left a remainder")
        return q

    # -- evaluation --------------------------------------------------------------

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    # -- rendering ----------------------------------------------------------------

    def to_text(self, var: str = "l") -> str:
        """Human form: descending powers, explicit signs, ^ exponents."""
        if not self.coeffs:
            return "0"
        parts: list[str] = []
        for power in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[power]
            if c == 0:
                continue
            mag = abs(c)
            if power == 0:
                body = str(mag)
            elif power == 1:
                body = var if mag == 1 else f"{mag}*{var}"
            else:
                body = f"{var}^{power}" if mag == 1 else f"{mag}*{var}^{power}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"{'+' if c > 0 else '-'} {body}")
        return " ".join(parts)

    def coefficients(self) -> list[int]:
        """Ascending coefficient list (JSON form)."""
        return list(self.coeffs)


X = Polynomial.variable()
ONE = Polynomial.one()
ZERO = Polynomial.zero()


def reduced_cycle_poly(m: int) -> Polynomial:
    """The chromatic polynomial of an m-cycle divided by l*(l-1).

    Computed as the alternating sum of powers of (l-1); degree m-2 and
    monic.  Equals ((l-1)^(m-1) - (-1)^(m-1)) / l by exact division.
    """
    if m < 2:
        raise ValueError("cycle length must be at least 2")
    base = X - 1
    total = Polynomial.zero()
    for i in range(m - 1):
        term = base ** ((m - 2) - i)
        total = total + term if i % 2 == 0 else total - term
    return total


def interpolate_integer_poly(
    samples: Sequence[tuple[int, int]], degree: int
) -> Polynomial:
    """Unique degree-`degree` integer polynomial through the samples.

    Uses exact rational Newton divided differences on the first degree+1
    points, then checks integer coefficients and residuals on every given
    sample.  Raises InterpolationError when the samples are inconsistent,
    which signals a bug in whatever produced them.
    """
    if degree < 0:
        raise ValueError("degree must be nonnegative")
    if len(samples) < degree + 1:
        raise InterpolationError(
            f"need at least {degree + 1} samples for degree {degree}, got {len(samples)}"
        )
    xs = [x for x, _ in samples]
    if len(set(xs)) != len(xs):
        raise InterpolationError("sample x values must be distinct")

    nodes = samples[: degree + 1]
    # Divided-difference table over exact rationals.
    coeffs = [Fraction(y) for _, y in nodes]
    points = [Fraction(x) for x, _ in nodes]
    for level in range(1, degree + 1):
        for i in range(degree, level - 1, -1):
            coeffs[i] = (coeffs[i] - coeffs[i - 1]) / (points[i] - points[i - level])

    # Expand the Newton form into monomial coefficients.
    acc = [Fraction(0)] * (degree + 1)
    acc[0] = coeffs[degree]
    for i in range(degree - 1, -1, -1):
        # acc = acc * (x - points[i]) + coeffs[i]; acc stays within the
        # degree bound because only degree multiplications happen in total.
        shifted = [Fraction(0)] * (degree + 1)
        for p in range(degree):
            if acc[p]:
                shifted[p + 1] += acc[p]
                shifted[p] -= acc[p] * points[i]
        shifted[0] += coeffs[i]
        acc = shifted

    ints: list[int] = []
    for c in acc:
        if c.denominator != 1:
            raise InterpolationError(f"non-integer coefficient {c} in interpolant")
        ints.append(int(c))
    poly = Polynomial(ints)
    if poly.degree > degree:
        raise InterpolationError("interpolant degree exceeds the stated bound")
    for x, y in samples:
        if poly(x) != y:
            raise InterpolationError(f"interpolant misses sample ({x}, {y})")
    return poly
