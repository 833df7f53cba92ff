from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from exradii.exact import (
    DegenerateTriangleError,
    NonPositiveSideError,
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

from .conftest import triangles

F = Fraction


class TestValidate:
    def test_ok(self):
        assert triangle_validate(5, 5, 6) == TriangleSides(5, 5, 6)

    @pytest.mark.parametrize("sides", [(1, 2, 3), (3, 1, 2), (1, 1, 5)])
    def test_degenerate(self, sides):
        with pytest.raises(DegenerateTriangleError):
            triangle_validate(*sides)

    @pytest.mark.parametrize("sides", [(0, 4, 4), (-3, 4, 5)])
    def test_non_positive(self, sides):
        with pytest.raises(NonPositiveSideError):
            triangle_validate(*sides)


@pytest.mark.parametrize(
    "sides,expected",
    [((3, 4, 5), 576), ((5, 5, 6), 2304), ((1, 1, 1), 3)],
)
def test_heron16(sides, expected):
    assert heron16(triangle_validate(*sides)) == expected


class TestIntegerSqrt:
    @pytest.mark.parametrize("n,r", [(0, 0), (1, 1), (576, 24), (2304, 48)])
    def test_squares(self, n, r):
        assert integer_sqrt(n) == r

    @pytest.mark.parametrize("n", [2, 3, 575, 10**18 + 1])
    def test_non_squares(self, n):
        assert integer_sqrt(n) is None

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            integer_sqrt(-1)

    @given(st.integers(min_value=0, max_value=10**40))
    def test_roundtrip(self, r):
        assert integer_sqrt(r * r) == r


class TestRationalSqrt:
    def test_resolved(self):
        assert rational_sqrt(F(9, 4)).resolved == F(3, 2)

    def test_unresolved(self):
        assert rational_sqrt(F(2)).resolved is None

    def test_reduces_first(self):
        root = rational_sqrt(F(2304, 16))
        assert root.resolved == 12

    @given(st.fractions(min_value=0, max_value=10**6))
    def test_square_always_resolves(self, q):
        assert rational_sqrt(q * q).resolved == q


class TestCosVertex:
    def test_right_angle(self):
        assert cos_vertex(TriangleSides(3, 4, 5), "c") == 0

    def test_equilateral(self):
        assert cos_vertex(TriangleSides(1, 1, 1), "a") == F(1, 2)

    def test_isosceles_apex(self):
        assert cos_vertex(TriangleSides(5, 5, 6), "c") == F(7, 25)

    @given(triangles(max_side=10**3))
    def test_open_interval(self, t):
        for label in ("a", "b", "c"):
            assert -1 < cos_vertex(t, label) < 1


class TestTanHalfSq:
    def test_right_angle(self):
        assert tan_half_sq(TriangleSides(3, 4, 5), "c") == 1

    def test_isosceles(self):
        assert tan_half_sq(TriangleSides(5, 5, 6), "c") == F(9, 16)

    def test_obtuse_apex(self):
        # cos of the apex is -7/25, so (1 - cos)/(1 + cos) = 16/9
        assert tan_half_sq(TriangleSides(5, 5, 8), "c") == F(16, 9)

    @given(triangles(max_side=10**4))
    def test_half_angle_identity(self, t):
        # tan^2(theta/2) = (1 - cos)/(1 + cos)
        for label in ("a", "b", "c"):
            cos = cos_vertex(t, label)
            assert tan_half_sq(t, label) == (1 - cos) / (1 + cos)


class TestTangentLengths:
    def test_right_triangle_matches_exradii(self):
        # for a right triangle the base tangent segments are the leg exradii
        t = TriangleSides(5, 4, 3)
        assert tangent_lengths(t, "a") == (3, 2)
        m = metrics(t)
        assert {m.rho_b.resolved, m.rho_c.resolved} == {2, 3}

    def test_equilateral(self):
        assert tangent_lengths(TriangleSides(1, 1, 1), "b") == (F(1, 2), F(1, 2))

    def test_isosceles(self):
        assert tangent_lengths(TriangleSides(5, 5, 6), "c") == (3, 3)

    @given(triangles(max_side=10**4))
    def test_sum_and_difference(self, t):
        for base in ("a", "b", "c"):
            x, y = tangent_lengths(t, base)
            legs = t.others(base)
            assert x + y == t.side(base)
            assert x - y == legs[0] - legs[1]


class TestMetrics:
    def test_5_5_6(self):
        m = metrics(TriangleSides(6, 5, 5))
        assert m.s == 8
        assert m.area.resolved == 12
        assert m.rho_a.resolved == 6
        assert m.rho_b.resolved == 4
        assert m.rho_c.resolved == 4

    def test_3_4_5(self):
        m = metrics(TriangleSides(5, 4, 3))
        assert m.cos_a == 0
        assert m.rho_a.resolved == m.s == 6

    def test_5_5_8(self):
        m = metrics(TriangleSides(8, 5, 5))
        assert m.s == 9
        assert m.area.resolved == 12
        assert m.rho_a.resolved == 12
        assert m.rho_b.resolved == 3

    def test_irrational_area(self):
        m = metrics(TriangleSides(1, 1, 1))
        assert m.area.resolved is None
        assert m.area.radicand == F(3, 16)
        assert str(m.area) == "√(3/16)"

    @given(triangles(max_side=10**4))
    @settings(max_examples=200)
    def test_invariants(self, t):
        m = metrics(t)
        assert m.heron16 > 0
        assert m.area.radicand == F(m.heron16, 16)
        for label in ("a", "b", "c"):
            x = t.side(label)
            y, z = t.others(label)
            # exradius squared, two ways
            assert m.rho(label).radicand * (m.s - x) == m.s * (m.s - y) * (m.s - z)
            assert m.rho(label).radicand == m.s * m.s * tan_half_sq(t, label)
        product = m.rho_a.radicand * m.rho_b.radicand * m.rho_c.radicand
        assert product == F(m.heron16, 16) * m.s * m.s

    @given(triangles(max_side=10**3))
    @settings(max_examples=200)
    def test_right_angle_characterization(self, t):
        m = metrics(t)
        for label in ("a", "b", "c"):
            is_right = m.cos(label) == 0
            rho_is_s = m.rho(label).resolved == m.s
            assert is_right == rho_is_s

    def test_integer_area_divides_into_exradii(self):
        m = metrics(TriangleSides(6, 5, 5))
        e = m.area.resolved
        for label in ("a", "b", "c"):
            assert m.rho(label).resolved == e / (m.s - m.sides.side(label))
