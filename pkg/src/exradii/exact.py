"""Exact triangle metrics over integers and rationals.

Everything here is pure, immutable, and floating-point free: side lengths
are arbitrary-precision integers, derived quantities are `Fraction`s, and
square roots are carried symbolically by `ExactRoot` until they provably
resolve to a rational.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple

SIDE_LABELS = ("a", "b", "c")


class TriangleError(ValueError):
    """Invalid triangle input."""


class NonPositiveSideError(TriangleError):
    pass


class DegenerateTriangleError(TriangleError):
    """Triangle inequality fails, including the collinear (equality) case."""


@dataclass(frozen=True)
class TriangleSides:
    """Validated integer side lengths; side `a` is opposite vertex A, etc."""

    a: int
    b: int
    c: int

    def side(self, label: str) -> int:
        if label not in SIDE_LABELS:
            raise ValueError(f"side label must be one of {SIDE_LABELS}, got {label!r}")
        return getattr(self, label)

    def others(self, label: str) -> Tuple[int, int]:
        """The two sides that are not `label`, in a-b-c order."""
        return tuple(self.side(x) for x in SIDE_LABELS if x != label)  # type: ignore[return-value]

    @property
    def perimeter(self) -> int:
        return self.a + self.b + self.c


def triangle_validate(a: int, b: int, c: int) -> TriangleSides:
    """Check positivity and the strict triangle inequality."""
    for x in (a, b, c):
        if not isinstance(x, int) or isinstance(x, bool):
            raise TriangleError(f"side lengths must be integers, got {x!r}")
    if a < 1 or b < 1 or c < 1:
        raise NonPositiveSideError(f"sides must be >= 1, got ({a}, {b}, {c})")
    if a + b <= c or b + c <= a or a + c <= b:
        raise DegenerateTriangleError(
            f"({a}, {b}, {c}) violates the strict triangle inequality"
        )
    return TriangleSides(a, b, c)


def heron16(t: TriangleSides) -> int:
    """16 * area^2 as an integer: (a+b+c)(-a+b+c)(a-b+c)(a+b-c)."""
    a, b, c = t.a, t.b, t.c
    return (a + b + c) * (-a + b + c) * (a - b + c) * (a + b - c)


def integer_sqrt(n: int) -> Optional[int]:
    """Exact square root of a nonnegative integer, or None if not a square.

    `math.isqrt` is exact integer Newton; the closing multiply makes the
    perfect-square decision unconditional.
    """
    if n < 0:
        raise ValueError("integer_sqrt requires n >= 0")
    r = math.isqrt(n)
    return r if r * r == n else None


@dataclass(frozen=True)
class ExactRoot:
    """sqrt of a nonnegative rational: resolved iff the radicand is a rational square."""

    radicand: Fraction
    resolved: Optional[Fraction]

    def __post_init__(self) -> None:
        if self.radicand < 0:
            raise ValueError("radicand must be nonnegative")
        if self.resolved is not None:
            assert self.resolved >= 0 and self.resolved * self.resolved == self.radicand

    @property
    def is_rational(self) -> bool:
        return self.resolved is not None

    @property
    def is_integer(self) -> bool:
        return self.resolved is not None and self.resolved.denominator == 1

    def __str__(self) -> str:
        if self.resolved is not None:
            return str(self.resolved)
        q = self.radicand
        inner = str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"
        return f"√({inner})"


def rational_sqrt(q: Fraction) -> ExactRoot:
    """ExactRoot of a nonnegative rational.

    A reduced p/q is a rational square iff p and q are both perfect squares.
    """
    q = Fraction(q)
    if q < 0:
        raise ValueError("rational_sqrt requires q >= 0")
    rn = integer_sqrt(q.numerator)
    rd = integer_sqrt(q.denominator)
    if rn is not None and rd is not None:
        return ExactRoot(q, Fraction(rn, rd))
    return ExactRoot(q, None)


def cos_vertex(t: TriangleSides, opposite_side: str) -> Fraction:
    """Cosine of the vertex angle opposite the named side (Law of Cosines)."""
    x = t.side(opposite_side)
    y, z = t.others(opposite_side)
    return Fraction(y * y + z * z - x * x, 2 * y * z)


def tan_half_sq(t: TriangleSides, opposite_side: str) -> Fraction:
    """tan^2 of half the vertex angle opposite the named side."""
    s = Fraction(t.perimeter, 2)
    x = t.side(opposite_side)
    y, z = t.others(opposite_side)
    return (s - y) * (s - z) / (s * (s - x))


def tangent_lengths(t: TriangleSides, base_side: str) -> Tuple[Fraction, Fraction]:
    """Tangent-point segments (x, y) along the base: x+y = base, x-y = leg difference."""
    base = t.side(base_side)
    y_side, z_side = t.others(base_side)
    x = Fraction(y_side - z_side + base, 2)
    y = Fraction(base + z_side - y_side, 2)
    return x, y


@dataclass(frozen=True)
class TriangleMetrics:
    sides: TriangleSides
    two_s: int
    s: Fraction
    heron16: int
    area: ExactRoot
    cos_a: Fraction
    cos_b: Fraction
    cos_c: Fraction
    rho_a: ExactRoot
    rho_b: ExactRoot
    rho_c: ExactRoot

    def cos(self, label: str) -> Fraction:
        return {"a": self.cos_a, "b": self.cos_b, "c": self.cos_c}[label]

    def rho(self, label: str) -> ExactRoot:
        return {"a": self.rho_a, "b": self.rho_b, "c": self.rho_c}[label]


def metrics(t: TriangleSides) -> TriangleMetrics:
    """All exact metrics of a triangle: semi-perimeter, area, cosines, exradii."""
    h16 = heron16(t)
    s = Fraction(t.perimeter, 2)
    area = rational_sqrt(Fraction(h16, 16))

    def rho(label: str) -> ExactRoot:
        x = t.side(label)
        y, z = t.others(label)
        return rational_sqrt(s * (s - y) * (s - z) / (s - x))

    return TriangleMetrics(
        sides=t,
        two_s=t.perimeter,
        s=s,
        heron16=h16,
        area=area,
        cos_a=cos_vertex(t, "a"),
        cos_b=cos_vertex(t, "b"),
        cos_c=cos_vertex(t, "c"),
        rho_a=rho("a"),
        rho_b=rho("b"),
        rho_c=rho("c"),
    )
