"""Exact rational algebra of the internal bisectors from the base vertices.

Sides follow the usual labels: ``a = |BC|``, ``b = |AC|``, ``c = |AB|``. All
lengths of bisectors are carried squared so every quantity stays rational.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

Rational = Union[Fraction, int, str]

_RATIONAL = re.compile(r"\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*")


class DegenerateTriangleError(ValueError):
    pass


class SignLawViolation(ArithmeticError):
    pass


def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"`` or ``"n"`` exactly. Decimals and exponents are rejected."""
    m = _RATIONAL.fullmatch(text)
    if m is None:
        raise ValueError(f"not an exact rational: {text!r} (expected 'p/q' or an integer)")
    num, den = m.groups()
    if den is not None and int(den) == 0:
        raise ZeroDivisionError(f"zero denominator in {text!r}")
    return Fraction(int(num), int(den) if den else 1)


def as_fraction(x: Rational) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int) and not isinstance(x, bool):
        return Fraction(x)
    if isinstance(x, str):
        return parse_rational(x)
    raise TypeError(f"expected an exact rational, got {type(x).__name__}")


def sign(x) -> int:
    return (x > 0) - (x < 0)


@dataclass(frozen=True)
class TriangleSides:
    a: Fraction  # |BC|
    b: Fraction  # |AC|
    c: Fraction  # |AB|

    def __post_init__(self):
        a, b, c = self.a, self.b, self.c
        if min(a, b, c) <= 0:
            raise DegenerateTriangleError(f"sides must be positive, got ({a}, {b}, {c})")
        if not (a + b > c and b + c > a and c + a > b):
            raise DegenerateTriangleError(
                f"sides ({a}, {b}, {c}) violate the strict triangle inequality"
            )

    def swapped(self) -> "TriangleSides":
        """Relabel A <-> B, which exchanges a and b."""
        return TriangleSides(self.b, self.a, self.c)

    def scaled(self, factor: Rational) -> "TriangleSides":
        factor = as_fraction(factor)
        return TriangleSides(self.a * factor, self.b * factor, self.c * factor)

    def as_strings(self) -> dict:
        return {"a": str(self.a), "b": str(self.b), "c": str(self.c)}


def new_triangle(a: Rational, b: Rational, c: Rational) -> TriangleSides:
    return TriangleSides(as_fraction(a), as_fraction(b), as_fraction(c))


# -- Stewart -------------------------------------------------------------------


@dataclass(frozen=True)
class SignedQuadruple:
    """Apex C with collinear A, B, P on an oriented axis.

    ``bp``, ``pa``, ``ab`` are signed measures along the caller's axis;
    ``ca2``, ``cb2``, ``cp2`` are squared distances from the apex.
    """

    bp: Fraction
    pa: Fraction
    ab: Fraction
    ca2: Fraction
    cb2: Fraction
    cp2: Fraction

    def __post_init__(self):
        if self.bp + self.pa + self.ab != 0:
            raise ValueError("signed measures violate BP + PA + AB = 0")
        if min(self.ca2, self.cb2, self.cp2) < 0:
            raise ValueError("squared distances must be non-negative")

    @classmethod
    def on_axis(cls, xa, xb, xp, ca2, cb2, cp2) -> "SignedQuadruple":
        """Build from axis coordinates of A, B, P (measures are differences)."""
        xa, xb, xp = as_fraction(xa), as_fraction(xb), as_fraction(xp)
        return cls(
            bp=xp - xb,
            pa=xa - xp,
            ab=xb - xa,
            ca2=as_fraction(ca2),
            cb2=as_fraction(cb2),
            cp2=as_fraction(cp2),
        )


def stewart_residual(q: SignedQuadruple) -> Fraction:
    return q.ca2 * q.bp + q.cb2 * q.pa + q.cp2 * q.ab + q.bp * q.pa * q.ab


def stewart_cevian_sq(ca2, cb2, bp, pa, ab) -> Fraction:
    """Solve Stewart's relation for |CP|^2 (requires A != B)."""
    if ab == 0:
        raise ZeroDivisionError("A and B coincide; |CP| is not determined")
    return -(ca2 * bp + cb2 * pa + bp * pa * ab) / ab


# -- bisectors -----------------------------------------------------------------


@dataclass(frozen=True)
class BisectorData:
    """Division ratios of the bisector feet and the squared bisector lengths.

    ``alpha`` places A1 on BC (``BA1 = alpha * BC``), ``beta`` places B1 on AC
    (``AB1 = beta * AC``).
    """

    alpha: Fraction
    one_minus_alpha: Fraction
    beta: Fraction
    one_minus_beta: Fraction
    aa1_sq: Fraction
    bb1_sq: Fraction


def bisector_data(t: TriangleSides) -> BisectorData:
    a, b, c = t.a, t.b, t.c
    alpha = c / (c + b)
    beta = c / (c + a)
    # Apex A over the axis B -> C, with A1 at alpha * a from B.
    aa1_sq = stewart_cevian_sq(
        ca2=c * c, cb2=b * b, bp=alpha * a - a, pa=-alpha * a, ab=a
    )
    # Apex B over the axis A -> C, with B1 at beta * b from A.
    bb1_sq = stewart_cevian_sq(
        ca2=c * c, cb2=a * a, bp=beta * b - b, pa=-beta * b, ab=b
    )
    return BisectorData(alpha, 1 - alpha, beta, 1 - beta, aa1_sq, bb1_sq)


def closed_form_aa1_sq(t: TriangleSides) -> Fraction:
    a, b, c = t.a, t.b, t.c
    return c * b / (c + b) ** 2 * ((c + b) ** 2 - a * a)


def closed_form_bb1_sq(t: TriangleSides) -> Fraction:
    a, b, c = t.a, t.b, t.c
    return c * a / (c + a) ** 2 * ((c + a) ** 2 - b * b)


def y_value(t: TriangleSides) -> Fraction:
    """The positive factor multiplying ``b - a`` in the bisector identity."""
    a, b, c = t.a, t.b, t.c
    numerator = b * a * (c * c + b * b + a * a + 2 * c * (b + a) + b * a)
    return 1 + numerator / ((c + a) ** 2 * (c + b) ** 2)


@dataclass(frozen=True)
class IdentityReport:
    y: Fraction
    lhs: Fraction  # (|AA1|^2 - |BB1|^2) / c
    rhs: Fraction  # (b - a) * Y
    passed: bool

    @property
    def residual(self) -> Fraction:
        return self.lhs - self.rhs


def lehmus_identity(t: TriangleSides) -> IdentityReport:
    """Check ``(|AA1| - |BB1|) * X = (b - a) * Y`` multiplied through by
    ``|AA1| + |BB1|``, which leaves only rational quantities."""
    data = bisector_data(t)
    y = y_value(t)
    lhs = (data.aa1_sq - data.bb1_sq) / t.c
    rhs = (t.b - t.a) * y
    return IdentityReport(y=y, lhs=lhs, rhs=rhs, passed=lhs == rhs)


def sign_theorem(t: TriangleSides) -> int:
    """Return sign(|AA1|^2 - |BB1|^2).

    Raises ``SignLawViolation`` if it disagrees with sign(b - a); equal
    bisectors and equal sides then coincide in both directions.
    """
    data = bisector_data(t)
    s = sign(data.aa1_sq - data.bb1_sq)
    if s != sign(t.b - t.a):
        raise SignLawViolation(
            f"sign(|AA1|^2-|BB1|^2)={s} but sign(b-a)={sign(t.b - t.a)} for {t}"
        )
    return s


def alpha_minus_beta(t: TriangleSides) -> Fraction:
    a, b, c = t.a, t.b, t.c
    return c * (a - b) / ((c + b) * (c + a))
