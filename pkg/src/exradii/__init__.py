"""Exact-arithmetic toolkit for triangle exradii: per-triangle metrics,
parametric families of Pythagorean and Heron isosceles triangles, and
brute-force completeness verification."""

from .exact import (
    DegenerateTriangleError,
    ExactRoot,
    NonPositiveSideError,
    TriangleError,
    TriangleMetrics,
    TriangleSides,
    cos_vertex,
    heron16,
    integer_sqrt,
    metrics,
    rational_sqrt,
    tan_half_sq,
    tangent_lengths,
    triangle_validate,
)
from .families import (
    F1Params,
    F2Params,
    InvalidBoundError,
    IsoFamily,
    IsoTriangleRecord,
    MNPair,
    NotCoprimeError,
    OrderViolationError,
    ParamError,
    PythParams,
    SameParityError,
    enumerate_f1_f2,
    enumerate_heron_isosceles,
    gen_f1,
    gen_f2,
    gen_heron_isosceles,
    gen_pythagorean,
    mn_validate,
    pyth_exradii,
)
from .oracle import (
    SearchReport,
    brute_heron_isosceles,
    brute_integral_exradii,
    verify_completeness,
    verify_prop1,
)

__version__ = "0.1.0"
