"""Numerator of the Hilbert series, truncated series expansion, and the
closed-form degree relations that tie Betti degrees to semigroup invariants.

The numerator is ``1 + sum_i (-1)^i sum_j z^(s_ij)`` over the positive
levels of a resolution; dividing by ``prod (1 - z^(n_i))`` and expanding
must reproduce the membership indicator of the semigroup, which is what
:func:`hilbert_check` verifies coefficient by coefficient.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ConsistencyFailure, InvalidParameters, UnsupportedClass
from .presentation import Classification, SemigroupClass
from .resolution import GradedResolution, resolve
from .semigroup import NumericalSemigroup


@dataclass(frozen=True)
class KPolynomial:
    """Sparse univariate numerator; ``terms`` is ((exponent, coeff), ...)
    sorted by exponent.  The constant term is 1 and the coefficients sum
    to zero."""

    terms: tuple[tuple[int, int], ...]

    def __post_init__(self):
        mapping = dict(self.terms)
        if mapping.get(0) != 1:
            raise ConsistencyFailure("numerator must have constant term 1")
        if sum(mapping.values()) != 0:
            raise ConsistencyFailure("numerator coefficients must sum to zero")

    def coefficient(self, exponent: int) -> int:
        return dict(self.terms).get(exponent, 0)

    def evaluate_at_one(self) -> int:
        return sum(c for _, c in self.terms)

    def as_string(self) -> str:
        parts = []
        for e, c in self.terms:
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                z = "z" if e == 1 else f"z^{e}"
                body = z if mag == 1 else f"{mag}*{z}"
            if not parts:
                parts.append(body if c > 0 else "-" + body)
            else:
                parts.append((" + " if c > 0 else " - ") + body)
        return "".join(parts)

    def to_json(self) -> dict:
        return {"terms": [[c, e] for e, c in self.terms], "string": self.as_string()}


def k_polynomial(R: GradedResolution) -> KPolynomial:
    """Alternating sum of twists of the resolution."""
    acc: dict[int, int] = {0: 1}
    sign = 1
    for level in R.betti_degrees[1:]:
        sign = -sign
        for s in level:
            acc[s] = acc.get(s, 0) + sign
    terms = tuple(sorted((e, c) for e, c in acc.items() if c))
    return KPolynomial(terms)


def hilbert_series(R: GradedResolution, degree: int) -> list[int]:
    """Coefficients up to ``degree`` of the numerator divided by
    ``prod (1 - z^(n_i))``, via one prefix-sum pass per generator."""
    coeffs = [0] * (degree + 1)
    for e, c in k_polynomial(R).terms:
        if e <= degree:
            coeffs[e] += c
    for n in R.semigroup.generators:
        for d in range(n, degree + 1):
            coeffs[d] += coeffs[d - n]
    return coeffs


def hilbert_check(
    R: GradedResolution, S: NumericalSemigroup | None = None, degree: int | None = None
) -> bool:
    """Expand the series to ``degree`` and compare against membership;
    every coefficient must be exactly the 0/1 indicator."""
    if S is None:
        S = R.semigroup
    g = S.frobenius()
    if degree is None:
        degree = g + S.generator_sum + 5
    if degree < g + 1:
        raise InvalidParameters(f"truncation degree {degree} must exceed the Frobenius number {g}")
    series = hilbert_series(R, degree)
    return all(
        c == (1 if S.contains(d) else 0) for d, c in enumerate(series)
    )


def pf_from_betti(R: GradedResolution) -> list[int]:
    """Pseudofrobenius numbers read off the top Betti degrees: each twist
    minus the sum of the generators."""
    N = R.semigroup.generator_sum
    return sorted(s - N for s in R.betti_degrees[-1])


def closed_form_pf(c: Classification) -> list[int]:
    """Pseudofrobenius numbers straight from the class parameters."""
    S = c.semigroup
    n = S.generators
    N = S.generator_sum
    d = c.data
    if c.tag is SemigroupClass.THREE_GEN_NON_SYMMETRIC:
        a1 = d.alpha[0]
        return sorted(
            (a1 * n[0] + d.alpha23 * n[2] - N, a1 * n[0] + d.alpha32 * n[1] - N)
        )
    if c.tag is SemigroupClass.FOUR_GEN_SYMMETRIC_NON_CI:
        a1, _, _, a4 = d.alpha
        return [a1 * n[0] + d.alpha32 * n[1] + a4 * n[3] - N]
    if c.tag is SemigroupClass.FOUR_GEN_PSEUDOSYMMETRIC:
        a1, a2, a3, _ = d.alpha
        return sorted(
            (
                a1 * n[0] + n[1] + n[3] - N,
                a1 * n[0] + a2 * n[1] + (a3 - 1) * n[2] - N,
            )
        )
    raise UnsupportedClass(f"no closed-form pseudofrobenius for class {c.tag.value}")


@dataclass(frozen=True)
class DegreeRelations:
    """Every printed alternative for each inner degree, all evaluated.

    ``kind`` is "symmetric" (values a1..a5, top (s0,)) or "pseudosymmetric"
    (values b1..b6, top (c1, c2)).
    """

    kind: str
    values: tuple[int, ...]
    top: tuple[int, ...]
    expressions: tuple[tuple[str, tuple[int, ...]], ...]


def _all_equal(name: str, values: tuple[int, ...]) -> int:
    if len(set(values)) != 1:
        raise ConsistencyFailure(f"alternative expressions for {name} disagree: {values}")
    return values[0]


def degree_relations(
    c: Classification, resolution: GradedResolution | None = None
) -> DegreeRelations:
    """Evaluate the alternative closed forms for the inner Betti degrees and
    check them against the resolution."""
    S = c.semigroup
    n = S.generators
    d = c.data
    if resolution is None:
        resolution = resolve(S, c)

    if c.tag is SemigroupClass.FOUR_GEN_SYMMETRIC_NON_CI:
        n1, n2, n3, n4 = n
        a1, a2, a3, a4 = d.alpha
        exprs = [
            ("a1", (a2 * n2 + d.alpha43 * n3, a4 * n4 + d.alpha32 * n2,
                    d.alpha21 * n1 + d.alpha43 * n3 + d.alpha24 * n4)),
            ("a2", (a1 * n1 + d.alpha43 * n3, a3 * n3 + d.alpha14 * n4,
                    d.alpha32 * n2 + d.alpha14 * n4 + d.alpha31 * n1)),
            ("a3", (a2 * n2 + d.alpha14 * n4, a4 * n4 + d.alpha21 * n1,
                    d.alpha21 * n1 + d.alpha43 * n3 + d.alpha42 * n2)),
            ("a4", (a1 * n1 + d.alpha32 * n2, a3 * n3 + d.alpha21 * n1,
                    d.alpha32 * n2 + d.alpha14 * n4 + d.alpha13 * n3)),
            ("a5", (a1 * n1 + d.alpha24 * n4, a2 * n2 + d.alpha31 * n1,
                    a3 * n3 + d.alpha42 * n2, a4 * n4 + d.alpha13 * n3)),
        ]
        values = tuple(_all_equal(name, vals) for name, vals in exprs)
        s0_exprs = (
            values[0] + a1 * n1,
            values[1] + a2 * n2,
            values[2] + a3 * n3,
            values[3] + a4 * n4,
            values[4] + d.alpha21 * n1 + d.alpha43 * n3,
        )
        s0 = _all_equal("s0", s0_exprs)
        exprs.append(("s0", s0_exprs))
        if tuple(sorted(values)) != resolution.betti_degrees[2]:
            raise ConsistencyFailure(
                f"inner degrees {sorted(values)} do not match the resolution {resolution.betti_degrees[2]}"
            )
        if (s0,) != resolution.betti_degrees[3]:
            raise ConsistencyFailure(f"top degree {s0} does not match the resolution")
        return DegreeRelations(
            "symmetric", values, (s0,), tuple((k, tuple(v)) for k, v in exprs)
        )

    if c.tag is SemigroupClass.FOUR_GEN_PSEUDOSYMMETRIC:
        n1, n2, n3, n4 = n
        a1, a2, a3, a4 = d.alpha
        a21 = d.alpha21
        exprs = [
            ("b1", (a1 * n1 + n2, a3 * n3 + (a21 + 1) * n1, n2 + n3 + (a4 - 1) * n4)),
            ("b2", (a2 * n2 + a3 * n3,)),
            ("b3", (a1 * n1 + (a3 - 1) * n3, a3 * n3 + (a4 - 1) * n4,
                    (a1 - a21 - 1) * n1 + n2 + (a4 - 1) * n4)),
            ("b4", (a2 * n2 + n1 + (a3 - 1) * n3, a4 * n4 + n2,
                    (a21 + 1) * n1 + (a3 - 1) * n3 + n4)),
            ("b5", (a1 * n1 + n4, (a1 - a21) * n1 + a2 * n2,
                    n1 + (a2 - 1) * n2 + a3 * n3, n3 + a4 * n4)),
            ("b6", (a2 * n2 + (a4 - 1) * n4, a21 * n1 + a4 * n4,
                    (a21 + 1) * n1 + (a2 - 1) * n2 + (a3 - 1) * n3)),
        ]
        values = tuple(_all_equal(name, vals) for name, vals in exprs)
        b1, b2, b3, b4, b5, b6 = values
        # c1 relations come from the degree-(c1) column of the last map,
        # whose nonzero rows sit at b1, b2, b4, b5
        c1_exprs = (b1 + n4, b2 + n1, b4 + n3, b5 + n2)
        c2_exprs = (
            b1 + (a2 - 1) * n2 + (a3 - 1) * n3,
            a2 * n2 + a3 * n3 + (a4 - 1) * n4,
            b3 + a2 * n2,
            b4 + (a1 - 1) * n1,
            b5 + a21 * n1 + (a3 - 1) * n3,
            b6 + a3 * n3,
        )
        c1 = _all_equal("c1", c1_exprs)
        c2 = _all_equal("c2", c2_exprs)
        exprs.append(("c1", c1_exprs))
        exprs.append(("c2", c2_exprs))
        if tuple(sorted(values)) != resolution.betti_degrees[2]:
            raise ConsistencyFailure(
                f"inner degrees {sorted(values)} do not match the resolution {resolution.betti_degrees[2]}"
            )
        if tuple(sorted((c1, c2))) != resolution.betti_degrees[3]:
            raise ConsistencyFailure(
                f"top degrees {(c1, c2)} do not match the resolution {resolution.betti_degrees[3]}"
            )
        return DegreeRelations(
            "pseudosymmetric", values, (c1, c2), tuple((k, tuple(v)) for k, v in exprs)
        )

    raise UnsupportedClass(f"no degree relations for class {c.tag.value}")
