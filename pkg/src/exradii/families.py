"""Parametric families: Pythagorean triples, Heron isosceles triangles, and
the two families with all three exradii integral.

Isosceles triangles use the convention alpha = base, beta = gamma = legs,
h = height from the apex onto the base.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Dict, Iterator, List, Tuple

from .exact import ExactRoot, TriangleSides, metrics, triangle_validate


class ParamError(ValueError):
    """Invalid family parameters."""


class OrderViolationError(ParamError):
    pass


class NotCoprimeError(ParamError):
    pass


class SameParityError(ParamError):
    pass


class InvalidBoundError(ValueError):
    pass


@dataclass(frozen=True)
class MNPair:
    """Generator pair: m > n >= 1.  `mn_validate` adds coprimality and
    opposite parity; the bare constructor is the relaxed form."""

    m: int
    n: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ParamError(f"n must be >= 1, got {self.n}")
        if self.m <= self.n:
            raise OrderViolationError(f"need m > n, got m={self.m}, n={self.n}")


def mn_validate(m: int, n: int) -> MNPair:
    """Strictly validated pair: m > n >= 1, coprime, opposite parity."""
    pair = MNPair(m, n)
    if math.gcd(m, n) != 1:
        raise NotCoprimeError(f"gcd({m}, {n}) = {math.gcd(m, n)} != 1")
    if (m + n) % 2 == 0:
        raise SameParityError(f"m={m} and n={n} have the same parity")
    return pair


def mn_is_valid(m: int, n: int) -> bool:
    return m > n >= 1 and math.gcd(m, n) == 1 and (m + n) % 2 == 1


@dataclass(frozen=True)
class PythParams:
    """Right-triangle generator; hypotenuse alpha = delta(m^2+n^2).

    Default orientation has beta = delta(2mn); `legs_swapped` exchanges
    beta and gamma (and with them rho_beta and rho_gamma).
    """

    mn: MNPair
    delta: int = 1
    legs_swapped: bool = False

    def __post_init__(self) -> None:
        if self.delta < 1:
            raise ParamError(f"delta must be >= 1, got {self.delta}")


@dataclass(frozen=True)
class IsoFamily:
    """Two congruent right triangles glued along a leg.

    Variant A glues along the even leg: alpha = 2*delta*(m^2-n^2), h = 2*delta*m*n.
    Variant B glues along the odd leg: alpha = 4*delta*m*n, h = delta*(m^2-n^2).
    Both have legs beta = gamma = delta*(m^2+n^2).
    """

    variant: str
    mn: MNPair
    delta: int = 1

    def __post_init__(self) -> None:
        if self.variant not in ("A", "B"):
            raise ParamError(f"variant must be 'A' or 'B', got {self.variant!r}")
        if self.delta < 1:
            raise ParamError(f"delta must be >= 1, got {self.delta}")


@dataclass(frozen=True)
class F1Params:
    """Integral-exradii family 1: delta = K*n specialization of variant A."""

    scale: int
    mn: MNPair

    def __post_init__(self) -> None:
        if self.scale < 1:
            raise ParamError(f"K must be >= 1, got {self.scale}")


@dataclass(frozen=True)
class F2Params:
    """Integral-exradii family 2: delta = L*(m-n) specialization of variant B."""

    scale: int
    mn: MNPair

    def __post_init__(self) -> None:
        if self.scale < 1:
            raise ParamError(f"L must be >= 1, got {self.scale}")


@dataclass(frozen=True)
class IsoTriangleRecord:
    """A Heron isosceles triangle with its height, area, and exradii."""

    alpha: int
    beta: int
    h: int
    area: int
    rho_alpha: ExactRoot
    rho_beta: ExactRoot
    source: str

    @property
    def perimeter(self) -> int:
        return self.alpha + 2 * self.beta

    @property
    def key(self) -> Tuple[int, int]:
        return (self.alpha, self.beta)

    def sides(self) -> TriangleSides:
        return TriangleSides(self.alpha, self.beta, self.beta)


def make_iso_record(alpha: int, beta: int, source: str) -> IsoTriangleRecord:
    """Build a record from the base/leg pair, computing h, E, and exradii
    through the exact metrics path (nothing is assumed integral)."""
    t = triangle_validate(alpha, beta, beta)
    m = metrics(t)
    if not m.area.is_integer:
        raise ValueError(f"({alpha}, {beta}, {beta}) has non-integer area {m.area}")
    area = int(m.area.resolved)  # type: ignore[arg-type]
    if alpha % 2 != 0 or (2 * area) % alpha != 0:
        raise ValueError(f"({alpha}, {beta}, {beta}) has non-integer height")
    h = 2 * area // alpha
    return IsoTriangleRecord(
        alpha=alpha,
        beta=beta,
        h=h,
        area=area,
        rho_alpha=m.rho_a,
        rho_beta=m.rho_b,
        source=source,
    )


def gen_pythagorean(p: PythParams) -> TriangleSides:
    """Eq.-(11)-style triple: a is the hypotenuse, b and c the legs."""
    m, n, d = p.mn.m, p.mn.n, p.delta
    mn_validate(m, n)
    alpha = d * (m * m + n * n)
    beta, gamma = d * 2 * m * n, d * (m * m - n * n)
    if p.legs_swapped:
        beta, gamma = gamma, beta
    return TriangleSides(alpha, beta, gamma)


def pyth_exradii(p: PythParams) -> Tuple[int, int, int]:
    """Closed-form exradii (rho_a, rho_b, rho_c) of the generated triple."""
    m, n, d = p.mn.m, p.mn.n, p.delta
    mn_validate(m, n)
    rho_a = d * m * (m + n)
    rho_b = d * n * (m + n)
    rho_c = d * m * (m - n)
    if p.legs_swapped:
        rho_b, rho_c = rho_c, rho_b
    return rho_a, rho_b, rho_c


def _iso_sides(f: IsoFamily) -> Tuple[int, int, int]:
    """(alpha, beta, h) from the gluing formulas."""
    m, n, d = f.mn.m, f.mn.n, f.delta
    if f.variant == "A":
        return 2 * d * (m * m - n * n), d * (m * m + n * n), 2 * d * m * n
    return 4 * d * m * n, d * (m * m + n * n), d * (m * m - n * n)


def gen_heron_isosceles(f: IsoFamily, *, relaxed: bool = False) -> IsoTriangleRecord:
    """Heron isosceles triangle from gluing parameters.

    With `relaxed=True` the coprimality/parity conditions on (m, n) are not
    enforced; the construction still yields integer area and height.
    """
    if not relaxed:
        mn_validate(f.mn.m, f.mn.n)
    alpha, beta, h = _iso_sides(f)
    rec = make_iso_record(
        alpha, beta, f"iso-{f.variant}(delta={f.delta},m={f.mn.m},n={f.mn.n})"
    )
    assert rec.h == h
    return rec


def f1_closed_form(p: F1Params) -> Tuple[int, int, int, int]:
    """(alpha, beta, rho_beta, rho_alpha) for family 1."""
    k, m, n = p.scale, p.mn.m, p.mn.n
    return (
        2 * k * n * (m * m - n * n),
        k * n * (m * m + n * n),
        2 * k * m * n * n,
        k * m * (m * m - n * n),
    )


def f2_closed_form(p: F2Params) -> Tuple[int, int, int, int]:
    """(alpha, beta, rho_beta, rho_alpha) for family 2."""
    l, m, n = p.scale, p.mn.m, p.mn.n
    return (
        4 * l * (m - n) * m * n,
        l * (m - n) * (m * m + n * n),
        l * (m + n) * (m - n) * (m - n),
        2 * l * m * n * (m + n),
    )


def gen_f1(p: F1Params) -> IsoTriangleRecord:
    mn_validate(p.mn.m, p.mn.n)
    alpha, beta, _, _ = f1_closed_form(p)
    return make_iso_record(alpha, beta, f"F1(K={p.scale},m={p.mn.m},n={p.mn.n})")


def gen_f2(p: F2Params) -> IsoTriangleRecord:
    mn_validate(p.mn.m, p.mn.n)
    alpha, beta, _, _ = f2_closed_form(p)
    return make_iso_record(alpha, beta, f"F2(L={p.scale},m={p.mn.m},n={p.mn.n})")


def _check_bound(max_perimeter: int) -> None:
    if max_perimeter < 3:
        raise InvalidBoundError(f"max_perimeter must be >= 3, got {max_perimeter}")


def _dedup_sorted(found: Dict[Tuple[int, int], List[str]]) -> Iterator[IsoTriangleRecord]:
    """Merge parameterizations hitting the same (alpha, beta); sources joined
    with '+' so overlaps stay visible.  Yields sorted by (perimeter, alpha)."""
    keys = sorted(found, key=lambda k: (k[0] + 2 * k[1], k[0]))
    for key in keys:
        yield make_iso_record(key[0], key[1], "+".join(sorted(set(found[key]))))


def enumerate_f1_f2(max_perimeter: int) -> Iterator[IsoTriangleRecord]:
    """Every family-1/family-2 triangle with perimeter <= bound, exactly once.

    Perimeters are 4*K*n*m^2 (family 1) and 2*L*(m-n)*(m+n)^2 (family 2),
    strictly increasing in every parameter, so the loops below are exhaustive.
    """
    _check_bound(max_perimeter)
    found: Dict[Tuple[int, int], List[str]] = {}

    n = 1
    while 4 * n * (n + 1) ** 2 <= max_perimeter:
        m = n + 1
        while 4 * n * m * m <= max_perimeter:
            if mn_is_valid(m, n):
                for k in range(1, max_perimeter // (4 * n * m * m) + 1):
                    p = F1Params(k, MNPair(m, n))
                    alpha, beta, _, _ = f1_closed_form(p)
                    found.setdefault((alpha, beta), []).append(
                        f"F1(K={k},m={m},n={n})"
                    )
            m += 1
        n += 1

    n = 1
    while 2 * (2 * n + 1) ** 2 <= max_perimeter:
        m = n + 1
        while 2 * (m - n) * (m + n) ** 2 <= max_perimeter:
            if mn_is_valid(m, n):
                unit = 2 * (m - n) * (m + n) ** 2
                for l in range(1, max_perimeter // unit + 1):
                    p = F2Params(l, MNPair(m, n))
                    alpha, beta, _, _ = f2_closed_form(p)
                    found.setdefault((alpha, beta), []).append(
                        f"F2(L={l},m={m},n={n})"
                    )
            m += 1
        n += 1

    yield from _dedup_sorted(found)


def enumerate_heron_isosceles(max_perimeter: int) -> Iterator[IsoTriangleRecord]:
    """Every glued (variant A or B) Heron isosceles triangle with perimeter
    <= bound, deduplicated by (alpha, beta).

    Perimeters are 4*delta*m^2 (A) and 2*delta*(m+n)^2 (B).
    """
    _check_bound(max_perimeter)
    found: Dict[Tuple[int, int], List[str]] = {}

    m = 2
    while 4 * m * m <= max_perimeter:
        for n in range(1, m):
            if mn_is_valid(m, n):
                for d in range(1, max_perimeter // (4 * m * m) + 1):
                    alpha, beta, _ = _iso_sides(IsoFamily("A", MNPair(m, n), d))
                    found.setdefault((alpha, beta), []).append(
                        f"iso-A(delta={d},m={m},n={n})"
                    )
        m += 1

    m = 2
    while 2 * (m + 1) ** 2 <= max_perimeter:
        for n in range(1, m):
            unit = 2 * (m + n) ** 2
            if unit <= max_perimeter and mn_is_valid(m, n):
                for d in range(1, max_perimeter // unit + 1):
                    alpha, beta, _ = _iso_sides(IsoFamily("B", MNPair(m, n), d))
                    found.setdefault((alpha, beta), []).append(
                        f"iso-B(delta={d},m={m},n={n})"
                    )
        m += 1

    yield from _dedup_sorted(found)
