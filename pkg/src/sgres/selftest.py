"""Built-in verification table: the worked examples with known-correct
values, runnable from the command line as ``sgres selftest``."""

from __future__ import annotations

from dataclasses import dataclass

from .indispensability import strong_indisp
from .invariants import (
    closed_form_pf,
    degree_relations,
    hilbert_series,
    k_polynomial,
    pf_from_betti,
)
from .presentation import classify
from .resolution import duality_check, resolve
from .semigroup import NumericalSemigroup


@dataclass
class CheckResult:
    name: str
    ok: bool
    expected: str
    got: str


def _checker(results: list[CheckResult]):
    def check(name, expected, got):
        results.append(CheckResult(name, expected == got, repr(expected), repr(got)))

    return check


def _block_7_9_10(check):
    S = NumericalSemigroup((7, 9, 10))
    c = classify(S)
    d = c.data
    check("7,9,10 class", "ThreeGenNonSymmetric", c.tag.value)
    check("7,9,10 alpha", (4, 3, 3), d.alpha)
    check(
        "7,9,10 alpha_ij",
        (2, 1, 1, 2, 3, 1),
        (d.alpha12, d.alpha13, d.alpha21, d.alpha23, d.alpha31, d.alpha32),
    )
    R = resolve(S, c)
    check("7,9,10 level-1 degrees", (27, 28, 30), R.betti_degrees[1])
    check("7,9,10 level-2 degrees", (37, 48), R.betti_degrees[2])
    check("7,9,10 PF (definition)", [11, 22], S.pseudofrobenius())
    check("7,9,10 PF (betti)", [11, 22], pf_from_betti(R))
    check("7,9,10 PF (closed form)", [11, 22], closed_form_pf(c))
    check(
        "7,9,10 numerator",
        "1 - z^27 - z^28 - z^30 + z^37 + z^48",
        k_polynomial(R).as_string(),
    )


def _block_7_9_8_13(check):
    S = NumericalSemigroup((7, 9, 8, 13))
    c = classify(S)
    d = c.data
    check("7,9,8,13 class", "FourGenSymmetricNonCI", c.tag.value)
    check("7,9,8,13 alpha", (3, 3, 2, 2), d.alpha)
    check("7,9,8,13 alpha_ij", (2, 1, 1, 2, 1, 1, 1, 1), d.ij_tuple())
    R = resolve(S, c)
    relations = degree_relations(c, R)
    check("7,9,8,13 inner degrees", (35, 29, 40, 30, 34), relations.values)
    check("7,9,8,13 top degree", (56,), relations.top)
    check("7,9,8,13 frobenius", 19, S.frobenius())
    check("7,9,8,13 frobenius (closed form)", [19], closed_form_pf(c))
    check("7,9,8,13 frobenius (betti)", [19], pf_from_betti(R))
    members = set(range(20, 41)) | {0, 7, 8, 9, 13, 14, 15, 16, 17, 18}
    indicator = [1 if n in members else 0 for n in range(41)]
    check("7,9,8,13 hilbert expansion to 40", indicator, hilbert_series(R, 40))
    duality = duality_check(R)
    check("7,9,8,13 duality", (True, 56), (duality.ok, duality.top_degree))


def _block_13_9_11_14(check):
    S = NumericalSemigroup((13, 9, 11, 14))
    c = classify(S)
    d = c.data
    check("13,9,11,14 class", "FourGenPseudosymmetric", c.tag.value)
    check("13,9,11,14 alpha", ((3, 3, 2, 3), 1), (d.alpha, d.alpha21))
    R = resolve(S, c)
    relations = degree_relations(c, R)
    check("13,9,11,14 inner degrees", (48, 49, 50, 51, 53, 55), relations.values)
    check("13,9,11,14 top degrees", (62, 77), relations.top)
    check("13,9,11,14 PF (definition)", [15, 30], S.pseudofrobenius())
    check("13,9,11,14 PF (betti)", [15, 30], pf_from_betti(R))
    check("13,9,11,14 PF (closed form)", [15, 30], closed_form_pf(c))
    expected = (
        "1 - z^22 - z^27 - z^37 - z^39 - z^42"
        " + z^48 + z^49 + z^50 + z^51 + z^53 + z^55 - z^62 - z^77"
    )
    check("13,9,11,14 numerator", expected, k_polynomial(R).as_string())
    report = strong_indisp(S, c)
    check("13,9,11,14 indispensability verdict", False, report.verdict)
    check(
        "13,9,11,14 witness",
        [(1, 20)],
        [(w.level, w.diff) for w in report.witnesses],
    )


def _block_families(check):
    for n3 in (5, 7, 9, 11, 13, 15):
        S = NumericalSemigroup((4, 6, n3))
        check(
            f"4,6,{n3} strongly indispensable",
            n3 in (5, 7),
            strong_indisp(S).verdict,
        )
    for n4 in (9, 11, 13, 17, 19):
        S = NumericalSemigroup((8, 12, 10, n4))
        check(
            f"8,12,10,{n4} strongly indispensable",
            n4 in (9, 11, 13),
            strong_indisp(S).verdict,
        )
    S = NumericalSemigroup((75, 180, 119, 136))
    check("75,180,119,136 strongly indispensable", True, strong_indisp(S).verdict)

    S = NumericalSemigroup((5, 12, 11, 14))
    report = strong_indisp(S)
    check("5,12,11,14 verdict", False, report.verdict)
    check("5,12,11,14 witness levels", {2}, {w.level for w in report.witnesses})

    S = NumericalSemigroup((5, 11, 8, 12))
    report = strong_indisp(S)
    check("5,11,8,12 verdict", False, report.verdict)
    check("5,11,8,12 witness levels", {1, 2}, {w.level for w in report.witnesses})


def run_selftest() -> list[CheckResult]:
    """Run every embedded check; the caller inspects the ``ok`` flags."""
    results: list[CheckResult] = []
    check = _checker(results)
    _block_7_9_10(check)
    _block_7_9_8_13(check)
    _block_13_9_11_14(check)
    _block_families(check)
    return results
