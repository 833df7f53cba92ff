import pytest

from exradii.exact import heron16, integer_sqrt, triangle_validate
from exradii.families import InvalidBoundError
from exradii.oracle import (
    brute_heron_isosceles,
    brute_integral_exradii,
    verify_completeness,
    verify_prop1,
)


class TestBruteHeron:
    def test_bound_10_empty(self):
        assert brute_heron_isosceles(10) == []

    def test_bound_16(self):
        assert [r.key for r in brute_heron_isosceles(16)] == [(6, 5)]

    def test_bound_18(self):
        assert [r.key for r in brute_heron_isosceles(18)] == [(6, 5), (8, 5)]

    def test_invalid_bound(self):
        with pytest.raises(InvalidBoundError):
            brute_heron_isosceles(2)

    def test_monotone_in_bound(self):
        small = {r.key for r in brute_heron_isosceles(100)}
        large = {r.key for r in brute_heron_isosceles(200)}
        assert small <= large

    def test_no_equilateral_is_heron(self):
        for rec in brute_heron_isosceles(200):
            assert rec.alpha != rec.beta
        for side in range(1, 200):
            h16 = heron16(triangle_validate(side, side, side))
            assert integer_sqrt(h16) is None or integer_sqrt(h16) % 4 != 0


class TestBruteIntegralExradii:
    def test_bound_15_empty(self):
        assert brute_integral_exradii(15) == []

    def test_bound_18(self):
        assert [r.key for r in brute_integral_exradii(18)] == [(6, 5), (8, 5)]

    def test_bound_72_contains_f1_member(self):
        # (20, 26, 26) has perimeter 72, exradii 15 and 24
        assert (20, 26) not in {r.key for r in brute_integral_exradii(71)}
        assert (20, 26) in {r.key for r in brute_integral_exradii(72)}

    def test_subset_of_heron(self):
        heron = {r.key for r in brute_heron_isosceles(300)}
        integral = {r.key for r in brute_integral_exradii(300)}
        assert integral <= heron


class TestVerify:
    def test_prop1_clean_at_200(self):
        report = verify_prop1(200)
        assert report.prop1_violations == []
        assert report.passed

    def test_completeness_prop2_200(self):
        report = verify_completeness(200, "prop2")
        assert report.passed
        assert report.oracle_set == report.family_set

    def test_completeness_theorem1_200(self):
        report = verify_completeness(200, "theorem1")
        assert report.passed

    def test_completeness_minimal(self):
        report = verify_completeness(16, "theorem1")
        assert report.oracle_set == report.family_set == {(6, 5)}

    def test_bad_target(self):
        with pytest.raises(ValueError):
            verify_completeness(100, "prop3")


class TestParallel:
    def test_threaded_scan_is_deterministic(self):
        seq = [r.key for r in brute_heron_isosceles(300)]
        par = [r.key for r in brute_heron_isosceles(300, threads=3)]
        assert seq == par

    def test_threaded_completeness(self):
        assert verify_completeness(300, "theorem1", threads=2).passed
