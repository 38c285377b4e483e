import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sgres import (
    DegreeMismatch,
    DimensionMismatch,
    GradedMatrix,
    NotSkewSymmetric,
    Poly,
    mat_mul,
    minor,
    monomial,
    pfaffian4,
    poly_from_str,
    poly_to_str,
    sdegree,
)


def polys(nvars=3, max_terms=4, max_exp=4, max_coeff=5):
    exponents = st.tuples(*([st.integers(0, max_exp)] * nvars))
    coeffs = st.integers(-max_coeff, max_coeff)
    return st.dictionaries(exponents, coeffs, max_size=max_terms).map(
        lambda terms: Poly(nvars, terms)
    )


class TestArithmetic:
    def test_sdegree_examples(self):
        assert sdegree((4, 0, 0), (7, 9, 10)) == 28
        assert sdegree((0, 0, 0), (7, 9, 10)) == 0
        assert sdegree((0, 3, 0), (7, 9, 10)) == 27
        with pytest.raises(DimensionMismatch):
            sdegree((1, 2), (7, 9, 10))

    def test_homogeneous_binomial(self):
        f1 = monomial(3, {1: 4}) - monomial(3, {2: 2, 3: 1})
        assert f1.is_homogeneous((7, 9, 10)) == 28
        assert (monomial(3, {1: 1}) + monomial(3, {2: 1})).is_homogeneous((7, 9, 10)) is None

    def test_mul_zero_add_neg(self):
        p = monomial(3, {1: 2}, 3) - monomial(3, {2: 1})
        assert (p * Poly.zero(3)).is_zero
        assert (p + (-p)).is_zero
        assert p * 0 == 0
        assert p - p == 0

    def test_power(self):
        p = monomial(2, {1: 1}) + monomial(2, {2: 1})
        assert p**0 == 1
        assert p**2 == p * p
        assert p**3 == p * p * p

    def test_dimension_mixing_rejected(self):
        with pytest.raises(DimensionMismatch):
            monomial(2, {1: 1}) + monomial(3, {1: 1})

    @settings(max_examples=80, deadline=None)
    @given(polys(), polys(), polys())
    def test_ring_axioms(self, a, b, c):
        assert (a + b) + c == a + (b + c)
        assert a + b == b + a
        assert (a * b) * c == a * (b * c)
        assert a * b == b * a
        assert a * (b + c) == a * b + a * c


class TestRendering:
    def test_binomial_strings(self):
        f1 = monomial(3, {1: 4}) - monomial(3, {2: 2, 3: 1})
        assert poly_to_str(f1, (7, 9, 10)) == "x1^4 - x2^2*x3"
        f2 = monomial(3, {2: 3}) - monomial(3, {1: 1, 3: 2})
        assert poly_to_str(f2, (7, 9, 10)) == "x2^3 - x1*x3^2"
        assert poly_to_str(Poly.zero(3)) == "0"
        assert poly_to_str(Poly.constant(3, -2)) == "-2"

    def test_parse_examples(self):
        p = poly_from_str("x1^3 - x3*x4^2", 4)
        assert p == monomial(4, {1: 3}) - monomial(4, {3: 1, 4: 2})
        assert poly_from_str("0", 2).is_zero
        assert poly_from_str("2*x1 + 3", 2) == 2 * monomial(2, {1: 1}) + Poly.constant(2, 3)
        assert poly_from_str("x1^3 − x2", 2) == monomial(2, {1: 3}) - monomial(2, {2: 1})

    def test_parse_rejects_unknown_variable(self):
        with pytest.raises(DimensionMismatch):
            poly_from_str("x5", 4)

    @settings(max_examples=120, deadline=None)
    @given(polys(nvars=4))
    def test_round_trip(self, p):
        assert poly_from_str(poly_to_str(p), 4) == p
        assert poly_from_str(poly_to_str(p, (7, 9, 8, 13)), 4) == p


def _graded(entries, row_degrees, col_degrees):
    return GradedMatrix(
        tuple(tuple(row) for row in entries),
        tuple(row_degrees),
        tuple(col_degrees),
    )


class TestGradedMatrix:
    def test_identity_times_matrix(self):
        one = Poly.constant(2, 1)
        z = Poly.zero(2)
        b = _graded([[monomial(2, {1: 2})], [monomial(2, {2: 1})]], (0, 1), (4,))
        ident = _graded([[one, z], [z, one]], (0, 1), (0, 1))
        assert mat_mul(ident, b).entries == b.entries

    def test_degree_mismatch(self):
        one = Poly.constant(2, 1)
        a = _graded([[one]], (0,), (0,))
        b = _graded([[one]], (1,), (1,))
        with pytest.raises(DegreeMismatch):
            mat_mul(a, b)

    def test_grading_violations(self):
        m = _graded([[monomial(2, {1: 1})]], (0,), (5,))
        assert m.grading_violations((2, 3)) == [(0, 0, 5, 2)]
        good = _graded([[monomial(2, {1: 1})]], (0,), (2,))
        assert good.grading_violations((2, 3)) == []

    def test_minor_and_bounds(self):
        x = monomial(1, {1: 1})
        grid = [[x, 2 * x], [3 * x, 4 * x]]
        assert minor(grid, (0, 1), (0, 1)) == 4 * x * x - 6 * x * x
        with pytest.raises(DimensionMismatch):
            minor(grid, (0, 1), (0,))


class TestPfaffian:
    def test_zero_matrix(self):
        z = Poly.zero(2)
        assert pfaffian4([[z] * 4 for _ in range(4)]).is_zero

    def test_not_skew_rejected(self):
        z = Poly.zero(2)
        x = monomial(2, {1: 1})
        bad = [[z, x, z, z], [x, z, z, z], [z, z, z, z], [z, z, z, z]]
        with pytest.raises(NotSkewSymmetric):
            pfaffian4(bad)
        bad_diag = [[x, z, z, z], [z, z, z, z], [z, z, z, z], [z, z, z, z]]
        with pytest.raises(NotSkewSymmetric):
            pfaffian4(bad_diag)

    @settings(max_examples=50, deadline=None)
    @given(st.lists(polys(nvars=2, max_terms=2, max_exp=3, max_coeff=3), min_size=6, max_size=6))
    def test_det_is_pfaffian_squared(self, uppers):
        z = Poly.zero(2)
        grid = [[z] * 4 for _ in range(4)]
        idx = 0
        for i in range(4):
            for j in range(i + 1, 4):
                grid[i][j] = uppers[idx]
                grid[j][i] = -uppers[idx]
                idx += 1
        pf = pfaffian4(grid)
        det = minor(grid, (0, 1, 2, 3), (0, 1, 2, 3))
        assert det == pf * pf
