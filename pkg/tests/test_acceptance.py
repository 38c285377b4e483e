"""Acceptance suite: every criterion is exercised at exact (integer)
tolerance and reports one PASS line when it holds."""

import pytest

from sgres import (
    NumericalSemigroup,
    SemigroupClass,
    UnsupportedEmbeddingDimension,
    classify,
    closed_form_pf,
    cross_validate,
    degree_relations,
    duality_check,
    hilbert_check,
    hilbert_series,
    k_polynomial,
    pf_from_betti,
    resolve,
    strong_indisp,
    verify_complex,
    verify_pfaffian,
    verify_witness_minors,
)
from sgres.scan import ci_semigroups, minimal_coprime_tuples
from sgres.selftest import run_selftest

_SIGNATURES = {
    SemigroupClass.TWO_GEN: (1, 1),
    SemigroupClass.THREE_GEN_SYMMETRIC_CI: (1, 2, 1),
    SemigroupClass.THREE_GEN_NON_SYMMETRIC: (1, 3, 2),
    SemigroupClass.FOUR_GEN_CI: (1, 3, 3, 1),
    SemigroupClass.FOUR_GEN_SYMMETRIC_NON_CI: (1, 5, 5, 1),
    SemigroupClass.FOUR_GEN_PSEUDOSYMMETRIC: (1, 5, 6, 2),
}


def _report(number, detail):
    print(f"ACCEPTANCE {number}: PASS ({detail})")


def test_criterion_1_three_gen_example():
    S = NumericalSemigroup((7, 9, 10))
    c = classify(S)
    d = c.data
    assert d.alpha == (4, 3, 3)
    assert (d.alpha12, d.alpha13, d.alpha21, d.alpha23, d.alpha31, d.alpha32) == (
        2, 1, 1, 2, 3, 1,
    )
    R = resolve(S, c)
    assert R.betti_degrees[1] == (27, 28, 30)
    assert R.betti_degrees[2] == (37, 48)
    assert S.pseudofrobenius() == [11, 22]
    assert pf_from_betti(R) == [11, 22]
    assert closed_form_pf(c) == [11, 22]
    assert k_polynomial(R).as_string() == "1 - z^27 - z^28 - z^30 + z^37 + z^48"
    _report(1, "7,9,10: parameters, twists, PF, numerator")


def test_criterion_2_bresinsky_example():
    S = NumericalSemigroup((7, 9, 8, 13))
    c = classify(S)
    assert c.data.alpha == (3, 3, 2, 2)
    assert c.data.ij_tuple() == (2, 1, 1, 2, 1, 1, 1, 1)
    R = resolve(S, c)
    rel = degree_relations(c, R)
    assert rel.values == (35, 29, 40, 30, 34)
    assert rel.top == (56,)
    assert S.frobenius() == 19
    members = {0, 7, 8, 9, 13, 14, 15, 16, 17, 18} | set(range(20, 41))
    assert hilbert_series(R, 40) == [1 if n in members else 0 for n in range(41)]
    duality = duality_check(R)
    assert duality.ok and duality.top_degree == 56
    _report(2, "7,9,8,13: parameters, inner degrees, Hilbert window, duality")


def test_criterion_3_komeda_example():
    S = NumericalSemigroup((13, 9, 11, 14))
    c = classify(S)
    assert (c.data.alpha, c.data.alpha21) == ((3, 3, 2, 3), 1)
    R = resolve(S, c)
    rel = degree_relations(c, R)
    assert rel.values == (48, 49, 50, 51, 53, 55)
    assert rel.top == (62, 77)
    assert S.pseudofrobenius() == [15, 30]
    assert pf_from_betti(R) == [15, 30]
    expected = (
        "1 - z^22 - z^27 - z^37 - z^39 - z^42"
        " + z^48 + z^49 + z^50 + z^51 + z^53 + z^55 - z^62 - z^77"
    )
    assert k_polynomial(R).as_string() == expected
    report = strong_indisp(S, c)
    assert report.verdict is False
    assert [(w.level, w.diff) for w in report.witnesses] == [(1, 20)]
    assert S.contains(20)
    _report(3, "13,9,11,14: parameters, degrees, numerator, witness 20")


def test_criterion_4_indispensability_families():
    for n3 in (5, 7, 9, 11, 13, 15):
        assert strong_indisp(NumericalSemigroup((4, 6, n3))).verdict is (n3 in (5, 7))
    for n4 in (9, 11, 13, 17, 19):
        assert strong_indisp(NumericalSemigroup((8, 12, 10, n4))).verdict is (
            n4 in (9, 11, 13)
        )
    assert strong_indisp(NumericalSemigroup((75, 180, 119, 136))).verdict is True
    report = strong_indisp(NumericalSemigroup((5, 12, 11, 14)))
    assert report.verdict is False
    assert {w.level for w in report.witnesses} == {2}
    report = strong_indisp(NumericalSemigroup((5, 11, 8, 12)))
    assert report.verdict is False
    assert {w.level for w in report.witnesses} == {1, 2}
    _report(4, "families 4,6,n3 and 8,12,10,n4 plus the three named instances")


def _property_suite(batch, tag):
    assert len(batch) >= 500
    for S, c in batch:
        assert c.tag is tag
        R = resolve(S, c)
        assert verify_complex(R).ok
        assert R.betti_numbers == _SIGNATURES[tag]
        assert sum((-1) ** i * b for i, b in enumerate(R.betti_numbers)) == 0
        pf = S.pseudofrobenius()
        assert R.betti_numbers[-1] == len(pf)
        assert pf_from_betti(R) == pf
        assert closed_form_pf(c) == pf
        assert hilbert_check(R, S, S.frobenius() + S.generator_sum + 5)


def test_criterion_5_herzog_properties(herzog_batch):
    _property_suite(herzog_batch, SemigroupClass.THREE_GEN_NON_SYMMETRIC)
    _report(5, f"{len(herzog_batch)} random 3-generated non-symmetric instances")


def test_criterion_5_bresinsky_properties(bresinsky_batch):
    _property_suite(bresinsky_batch, SemigroupClass.FOUR_GEN_SYMMETRIC_NON_CI)
    _report(5, f"{len(bresinsky_batch)} generated 4-generated symmetric non-CI instances")


def test_criterion_5_komeda_properties(komeda_batch):
    _property_suite(komeda_batch, SemigroupClass.FOUR_GEN_PSEUDOSYMMETRIC)
    _report(5, f"{len(komeda_batch)} generated pseudosymmetric instances")


def test_criterion_6_pfaffian_structure(bresinsky_batch):
    assert len(bresinsky_batch) >= 500
    for S, c in bresinsky_batch:
        R = resolve(S, c)
        pfaffian = verify_pfaffian(R)
        assert pfaffian.ok, (S.generators, pfaffian.failed())
        duality = duality_check(R)
        assert duality.ok
        assert duality.top_degree == S.frobenius() + S.generator_sum
    _report(6, f"pfaffian structure and duality on {len(bresinsky_batch)} instances")


def test_criterion_7_witness_minors(komeda_batch):
    assert len(komeda_batch) >= 500
    for S, c in komeda_batch:
        R = resolve(S, c)
        report = verify_witness_minors(R)
        assert report.ok, (S.generators, report.two_minor_hits)
        c1, c2 = R.betti_degrees[3]
        g = S.frobenius()
        assert g % 2 == 0
        assert c2 - c1 == g // 2
        assert not S.contains(g // 2)
    _report(7, f"witness minors and top-degree gap on {len(komeda_batch)} instances")


def test_criterion_8_oracle_equivalence_scan():
    three, four = ci_semigroups(60)
    assert len(three) > 1000 and len(four) > 1000
    mismatches = []
    for S in three + four:
        report = cross_validate(S)
        if not report.agree:  # pragma: no cover - cross_validate raises instead
            mismatches.append(S.generators)
    assert not mismatches
    # bounded sweep of the remaining 3-generated class: criterion vs differences
    checked = 0
    for t in minimal_coprime_tuples(30, 3):
        S = NumericalSemigroup(t)
        if classify(S).tag is SemigroupClass.THREE_GEN_NON_SYMMETRIC:
            assert cross_validate(S).agree
            checked += 1
    assert checked > 500
    _report(8, f"{len(three)} + {len(four)} CI semigroups <= 60; {checked} non-symmetric triples <= 30")


def test_criterion_9_selftest_and_scope():
    results = run_selftest()
    failures = [r for r in results if not r.ok]
    assert not failures, failures
    with pytest.raises(UnsupportedEmbeddingDimension):
        classify(NumericalSemigroup((19, 27, 28, 31, 32)))
    _report(9, f"selftest table of {len(results)} checks; dimension-5 input rejected")
