"""Brute-force search over integer isosceles triangles.

The scan shares no closed forms with `families`: it tests area integrality
with heron16 + integer_sqrt and exradius integrality through the exact
metrics, pair by pair.  Agreement with the parametric enumerations is
therefore evidence, not tautology.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterator, List, Optional, Set, Tuple

from .exact import TriangleSides, heron16, integer_sqrt, metrics
from .families import (
    InvalidBoundError,
    IsoTriangleRecord,
    enumerate_f1_f2,
    enumerate_heron_isosceles,
    make_iso_record,
)

ProgressFn = Callable[[int, int], None]


@dataclass
class SearchReport:
    bound: int
    target: str
    oracle_set: Set[Tuple[int, int]] = field(default_factory=set)
    family_set: Set[Tuple[int, int]] = field(default_factory=set)
    missing_from_family: Set[Tuple[int, int]] = field(default_factory=set)
    extra_in_family: Set[Tuple[int, int]] = field(default_factory=set)
    prop1_violations: List[Tuple[int, int]] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return not (self.missing_from_family or self.extra_in_family or self.prop1_violations)


def _check_bound(max_perimeter: int) -> None:
    if max_perimeter < 3:
        raise InvalidBoundError(f"max_perimeter must be >= 3, got {max_perimeter}")


def _scan_range(args: Tuple[int, int, int]) -> List[Tuple[int, int, int]]:
    """All (alpha, beta, E) with integer area, alpha in [lo, hi)."""
    lo, hi, bound = args
    out: List[Tuple[int, int, int]] = []
    for alpha in range(lo, hi):
        for beta in range(alpha // 2 + 1, (bound - alpha) // 2 + 1):
            if beta == alpha:
                continue
            h16 = heron16(TriangleSides(alpha, beta, beta))
            r = integer_sqrt(h16)
            if r is not None and r % 4 == 0:
                out.append((alpha, beta, r // 4))
    return out


def _heron_candidates(
    max_perimeter: int, threads: int = 1, progress: Optional[ProgressFn] = None
) -> Iterator[Tuple[int, int, int]]:
    """Direct scan of every isosceles pair; yields (alpha, beta, E) sorted by
    (perimeter, alpha) regardless of the degree of parallelism."""
    alpha_max = max_perimeter - 2  # beta >= 1 needs alpha + 2 <= bound
    results: List[Tuple[int, int, int]] = []
    if threads <= 1 or alpha_max < 2:
        done = 0
        chunk = max(1, alpha_max // 20)
        for lo in range(1, alpha_max + 1, chunk):
            results.extend(_scan_range((lo, min(lo + chunk, alpha_max + 1), max_perimeter)))
            done = min(lo + chunk - 1, alpha_max)
            if progress:
                progress(done, alpha_max)
    else:
        chunks = [
            (lo, min(lo + 64, alpha_max + 1), max_perimeter)
            for lo in range(1, alpha_max + 1, 64)
        ]
        with ProcessPoolExecutor(max_workers=threads) as pool:
            for i, part in enumerate(pool.map(_scan_range, chunks)):
                results.extend(part)
                if progress:
                    progress(min((i + 1) * 64, alpha_max), alpha_max)
    results.sort(key=lambda t: (t[0] + 2 * t[1], t[0]))
    yield from results


def brute_heron_isosceles(
    max_perimeter: int, *, threads: int = 1, progress: Optional[ProgressFn] = None
) -> List[IsoTriangleRecord]:
    """All Heron isosceles triangles with perimeter <= bound, by exhaustion."""
    _check_bound(max_perimeter)
    return [
        make_iso_record(alpha, beta, "brute-force")
        for alpha, beta, _ in _heron_candidates(max_perimeter, threads, progress)
    ]


def brute_integral_exradii(
    max_perimeter: int, *, threads: int = 1, progress: Optional[ProgressFn] = None
) -> List[IsoTriangleRecord]:
    """The subset of the brute-force set whose three exradii are all integers."""
    return [
        rec
        for rec in brute_heron_isosceles(max_perimeter, threads=threads, progress=progress)
        if rec.rho_alpha.is_integer and rec.rho_beta.is_integer
    ]


def verify_prop1(
    max_perimeter: int, *, threads: int = 1, progress: Optional[ProgressFn] = None
) -> SearchReport:
    """Check that every brute-forced Heron isosceles triangle has an even base
    and an integer height satisfying h^2 + (alpha/2)^2 = beta^2."""
    _check_bound(max_perimeter)
    t0 = time.perf_counter()
    report = SearchReport(bound=max_perimeter, target="prop1")
    for alpha, beta, area in _heron_candidates(max_perimeter, threads, progress):
        report.oracle_set.add((alpha, beta))
        if alpha % 2 != 0 or (2 * area) % alpha != 0:
            report.prop1_violations.append((alpha, beta))
            continue
        h = 2 * area // alpha
        if h * h + (alpha // 2) ** 2 != beta * beta:
            report.prop1_violations.append((alpha, beta))
    report.elapsed = time.perf_counter() - t0
    return report


def verify_completeness(
    max_perimeter: int,
    target: str,
    *,
    threads: int = 1,
    progress: Optional[ProgressFn] = None,
) -> SearchReport:
    """Set-equality check of a parametric enumeration against the brute scan.

    target 'prop2'    : all Heron isosceles vs the glued families A/B.
    target 'theorem1' : integral-exradii subset vs the F1/F2 union.
    """
    if target not in ("prop2", "theorem1"):
        raise ValueError(f"target must be 'prop2' or 'theorem1', got {target!r}")
    _check_bound(max_perimeter)
    t0 = time.perf_counter()
    if target == "prop2":
        oracle = brute_heron_isosceles(max_perimeter, threads=threads, progress=progress)
        family: Iterator[IsoTriangleRecord] = enumerate_heron_isosceles(max_perimeter)
    else:
        oracle = brute_integral_exradii(max_perimeter, threads=threads, progress=progress)
        family = enumerate_f1_f2(max_perimeter)
    report = SearchReport(bound=max_perimeter, target=target)
    report.oracle_set = {rec.key for rec in oracle}
    report.family_set = {rec.key for rec in family}
    report.missing_from_family = report.oracle_set - report.family_set
    report.extra_in_family = report.family_set - report.oracle_set
    report.elapsed = time.perf_counter() - t0
    return report
