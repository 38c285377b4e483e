import pytest

from sgres import (
    ConsistencyFailure,
    InvalidParameters,
    KPolynomial,
    NumericalSemigroup,
    UnsupportedClass,
    classify,
    closed_form_pf,
    degree_relations,
    hilbert_check,
    hilbert_series,
    k_polynomial,
    pf_from_betti,
    resolve,
)


class TestKPolynomial:
    def test_three_gen(self):
        R = resolve(NumericalSemigroup((7, 9, 10)))
        kp = k_polynomial(R)
        assert kp.as_string() == "1 - z^27 - z^28 - z^30 + z^37 + z^48"
        assert kp.coefficient(0) == 1
        assert kp.evaluate_at_one() == 0

    def test_bresinsky(self):
        kp = k_polynomial(resolve(NumericalSemigroup((7, 9, 8, 13))))
        expected = (
            "1 - z^16 - z^21 - z^22 - z^26 - z^27"
            " + z^29 + z^30 + z^34 + z^35 + z^40 - z^56"
        )
        assert kp.as_string() == expected

    def test_komeda(self):
        kp = k_polynomial(resolve(NumericalSemigroup((13, 9, 11, 14))))
        expected = (
            "1 - z^22 - z^27 - z^37 - z^39 - z^42"
            " + z^48 + z^49 + z^50 + z^51 + z^53 + z^55 - z^62 - z^77"
        )
        assert kp.as_string() == expected

    def test_invariants_enforced(self):
        with pytest.raises(ConsistencyFailure):
            KPolynomial(((0, 2), (5, -2)))
        with pytest.raises(ConsistencyFailure):
            KPolynomial(((0, 1), (5, -2)))

    def test_json(self):
        kp = k_polynomial(resolve(NumericalSemigroup((2, 3))))
        assert kp.to_json() == {"terms": [[1, 0], [-1, 6]], "string": "1 - z^6"}


class TestHilbert:
    def test_bresinsky_membership_window(self):
        S = NumericalSemigroup((7, 9, 8, 13))
        series = hilbert_series(resolve(S), 25)
        members = {0, 7, 8, 9, 13, 14, 15, 16, 17, 18} | set(range(20, 26))
        assert series == [1 if n in members else 0 for n in range(26)]

    def test_two_gen(self):
        series = hilbert_series(resolve(NumericalSemigroup((2, 3))), 5)
        assert series == [1, 0, 1, 1, 1, 1]

    def test_komeda_against_membership(self):
        S = NumericalSemigroup((13, 9, 11, 14))
        R = resolve(S)
        series = hilbert_series(R, 80)
        assert series == [1 if S.contains(n) else 0 for n in range(81)]
        assert hilbert_check(R, S, 80)

    def test_default_degree(self):
        S = NumericalSemigroup((7, 9, 10))
        assert hilbert_check(resolve(S))

    def test_degree_too_small_rejected(self):
        S = NumericalSemigroup((7, 9, 10))
        with pytest.raises(InvalidParameters):
            hilbert_check(resolve(S), S, 5)


class TestPfRoutes:
    @pytest.mark.parametrize(
        "gens,expected",
        [
            ((7, 9, 10), [11, 22]),
            ((13, 9, 11, 14), [15, 30]),
            ((7, 9, 8, 13), [19]),
        ],
    )
    def test_betti_route(self, gens, expected):
        S = NumericalSemigroup(gens)
        assert pf_from_betti(resolve(S)) == expected
        assert S.pseudofrobenius() == expected

    @pytest.mark.parametrize(
        "gens,expected",
        [
            ((7, 9, 10), [11, 22]),
            ((7, 9, 8, 13), [19]),
            ((13, 9, 11, 14), [15, 30]),
        ],
    )
    def test_closed_form(self, gens, expected):
        assert closed_form_pf(classify(NumericalSemigroup(gens))) == expected

    def test_closed_form_unsupported(self):
        with pytest.raises(UnsupportedClass):
            closed_form_pf(classify(NumericalSemigroup((4, 6, 5))))


class TestDegreeRelations:
    def test_bresinsky_example(self):
        c = classify(NumericalSemigroup((7, 9, 8, 13)))
        rel = degree_relations(c)
        assert rel.kind == "symmetric"
        assert rel.values == (35, 29, 40, 30, 34)
        assert rel.top == (56,)
        for name, alternatives in rel.expressions:
            assert len(set(alternatives)) == 1, name

    def test_komeda_example(self):
        c = classify(NumericalSemigroup((13, 9, 11, 14)))
        rel = degree_relations(c)
        assert rel.kind == "pseudosymmetric"
        assert rel.values == (48, 49, 50, 51, 53, 55)
        assert rel.top == (62, 77)

    def test_pseudo_top_gap_is_half_frobenius(self, komeda_batch):
        for S, c in komeda_batch[:120]:
            rel = degree_relations(c)
            c1, c2 = rel.top
            g = S.frobenius()
            assert g % 2 == 0
            assert max(c1, c2) - min(c1, c2) == g // 2
            assert not S.contains(g // 2)

    def test_unsupported_class(self):
        with pytest.raises(UnsupportedClass):
            degree_relations(classify(NumericalSemigroup((7, 9, 10))))
