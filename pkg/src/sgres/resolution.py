"""Explicit graded minimal free resolutions for the supported classes.

For complete intersections the resolution is the Koszul complex on the
binomial generators (sign convention: the basis element for a subset T maps
to the alternating sum over dropping one index, with the sign given by the
position of the dropped index in T).

For the three non-CI classes the maps follow fixed matrix patterns in the
class parameters:

* 3 generators, not symmetric: a 3x2 matrix of monomials;
* 4 generators, symmetric, not CI: a 5x5 alternating matrix whose principal
  4x4 pfaffians recover the five binomial generators up to sign, and the
  last map is the transpose of the first;
* 4 generators, pseudosymmetric: a 5x6 matrix and a 6x2 matrix.  The (6, 2)
  entry of the last map must be the negative of the middle matrix's (2, 2)
  entry; the product with the middle matrix vanishes only with that sign.

Column twists are never written out by hand: they are inferred from the row
twists plus entry degrees, which re-validates homogeneity of every entry
during construction.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .errors import (
    DegreeMismatch,
    NotHomogeneous,
    UnsupportedClass,
    VerificationFailure,
)
from .polyalg import (
    GradedMatrix,
    Poly,
    all_minors,
    mat_mul,
    minor,
    monomial,
    pfaffian4,
    poly_to_str,
    transpose_entries,
)
from .presentation import (
    Classification,
    SemigroupClass,
    classify,
    generators_ideal,
)
from .semigroup import NumericalSemigroup

_KOSZUL_TAGS = (
    SemigroupClass.TWO_GEN,
    SemigroupClass.THREE_GEN_SYMMETRIC_CI,
    SemigroupClass.FOUR_GEN_CI,
)
_SYMMETRIC_TAGS = (
    SemigroupClass.TWO_GEN,
    SemigroupClass.THREE_GEN_SYMMETRIC_CI,
    SemigroupClass.FOUR_GEN_CI,
    SemigroupClass.FOUR_GEN_SYMMETRIC_NON_CI,
)


@dataclass(frozen=True)
class GradedResolution:
    """Chain of graded matrices resolving the semigroup ring.

    ``maps[i]`` is the map from the (i+1)-st free module to the i-th; its
    column twists are the level-(i+1) Betti degrees in original column
    order.  ``betti_degrees`` exposes every level as a sorted tuple, the
    zeroth level being (0,).
    """

    semigroup: NumericalSemigroup
    class_tag: SemigroupClass
    maps: tuple[GradedMatrix, ...]

    @property
    def length(self) -> int:
        return len(self.maps)

    @property
    def betti_numbers(self) -> tuple[int, ...]:
        return (1,) + tuple(m.num_cols for m in self.maps)

    @property
    def betti_degrees(self) -> tuple[tuple[int, ...], ...]:
        return ((0,),) + tuple(tuple(sorted(m.col_degrees)) for m in self.maps)

    def generator_polys(self) -> tuple[Poly, ...]:
        return self.maps[0].entries[0]

    def to_json(self) -> dict:
        weights = self.semigroup.generators
        return {
            "generators": list(weights),
            "class": self.class_tag.value,
            "betti_degrees": [list(level) for level in self.betti_degrees],
            "maps": [
                {
                    "rows": m.num_rows,
                    "cols": m.num_cols,
                    "row_degrees": list(m.row_degrees),
                    "col_degrees": list(m.col_degrees),
                    "entries": [
                        [poly_to_str(p, weights) for p in row] for row in m.entries
                    ],
                }
                for m in self.maps
            ],
        }


def _infer_col_degrees(entries, row_degrees, weights) -> tuple[int, ...]:
    cols = len(entries[0])
    out = []
    for j in range(cols):
        degrees = set()
        for i, row in enumerate(entries):
            p = row[j]
            if p.is_zero:
                continue
            d = p.is_homogeneous(weights)
            if d is None:
                raise DegreeMismatch(f"entry ({i},{j}) is not homogeneous")
            degrees.add(row_degrees[i] + d)
        if not degrees:
            raise DegreeMismatch(f"column {j} is zero; twist cannot be inferred")
        if len(degrees) != 1:
            raise DegreeMismatch(f"column {j} mixes twists {sorted(degrees)}")
        out.append(degrees.pop())
    return tuple(out)


def _chain(S: NumericalSemigroup, levels: list[tuple[tuple[Poly, ...], ...]]):
    weights = S.generators
    maps = []
    row_degrees: tuple[int, ...] = (0,)
    for entries in levels:
        col_degrees = _infer_col_degrees(entries, row_degrees, weights)
        maps.append(GradedMatrix(entries, row_degrees, col_degrees))
        row_degrees = col_degrees
    return tuple(maps)


def koszul(
    fs, S: NumericalSemigroup, class_tag: SemigroupClass | None = None
) -> GradedResolution:
    """Koszul complex on homogeneous polynomials ``fs``."""
    weights = S.generators
    nvars = len(weights)
    for f in fs:
        if f.is_zero or f.is_homogeneous(weights) is None:
            raise NotHomogeneous(f"{poly_to_str(f)} is not homogeneous for {weights}")
    c = len(fs)
    levels = []
    prev_basis: list[tuple[int, ...]] = [()]
    for level in range(1, c + 1):
        basis = list(combinations(range(c), level))
        index_of = {T: i for i, T in enumerate(prev_basis)}
        entries = [[Poly.zero(nvars) for _ in basis] for _ in prev_basis]
        for col, T in enumerate(basis):
            for pos, t in enumerate(T):
                rest = T[:pos] + T[pos + 1 :]
                sign = 1 if pos % 2 == 0 else -1
                row = index_of[rest]
                entries[row][col] = entries[row][col] + sign * fs[t]
        levels.append(tuple(tuple(r) for r in entries))
        prev_basis = basis
    if class_tag is None:
        class_tag = classify(S).tag
    return GradedResolution(S, class_tag, _chain(S, levels))


def _three_gen_maps(S, data, fs):
    f1, f2, f3 = fs
    m = monomial
    phi2 = (
        (m(3, {3: data.alpha23}), m(3, {2: data.alpha32})),
        (m(3, {1: data.alpha31}), m(3, {3: data.alpha13})),
        (m(3, {2: data.alpha12}), m(3, {1: data.alpha21})),
    )
    return [((f1, f2, f3),), phi2]


def _bresinsky_maps(S, data, fs):
    m = monomial
    z = Poly.zero(4)
    a21, a31, a32, a42 = data.alpha21, data.alpha31, data.alpha32, data.alpha42
    a13, a43, a14, a24 = data.alpha13, data.alpha43, data.alpha14, data.alpha24
    phi2 = (
        (z, -m(4, {3: a43}), z, -m(4, {2: a32}), -m(4, {4: a24})),
        (m(4, {3: a43}), z, m(4, {4: a14}), z, -m(4, {1: a31})),
        (z, -m(4, {4: a14}), z, -m(4, {1: a21}), -m(4, {2: a42})),
        (m(4, {2: a32}), z, m(4, {1: a21}), z, -m(4, {3: a13})),
        (m(4, {4: a24}), m(4, {1: a31}), m(4, {2: a42}), m(4, {3: a13}), z),
    )
    phi3 = tuple((f,) for f in fs)
    return [(tuple(fs),), phi2, phi3]


def _komeda_maps(S, data, fs):
    m = monomial
    z = Poly.zero(4)
    a1, a2, a3, a4 = data.alpha
    a21 = data.alpha21
    f2, f3 = fs[1], fs[2]
    phi2 = (
        (m(4, {2: 1}), z, m(4, {3: a3 - 1}), z, m(4, {4: 1}), z),
        (z, f3, z, m(4, {1: 1, 3: a3 - 1}), m(4, {1: a1 - a21}), m(4, {4: a4 - 1})),
        (m(4, {1: a21 + 1}), -f2, m(4, {4: a4 - 1}), z, m(4, {1: 1, 2: a2 - 1}), z),
        (z, z, z, m(4, {2: 1}), m(4, {3: 1}), m(4, {1: a21})),
        (-m(4, {3: 1}), z, -m(4, {1: a1 - a21 - 1}), m(4, {4: 1}), z, m(4, {2: a2 - 1})),
    )
    phi3 = (
        (m(4, {4: 1}), -m(4, {2: a2 - 1, 3: a3 - 1})),
        (-m(4, {1: 1}), m(4, {4: a4 - 1})),
        (z, f2),
        (m(4, {3: 1}), -m(4, {1: a1 - 1})),
        (-m(4, {2: 1}), m(4, {1: a21, 3: a3 - 1})),
        (z, -f3),
    )
    return [(tuple(fs),), phi2, phi3]


def resolve(
    S: NumericalSemigroup, classification: Classification | None = None
) -> GradedResolution:
    """Graded minimal free resolution of the semigroup ring of ``S``.

    The complex property is re-verified symbolically before returning.
    """
    c = classification if classification is not None else classify(S)
    if c.tag is SemigroupClass.UNSUPPORTED:
        raise UnsupportedClass(f"no resolution for {S!r}: class Unsupported")
    fs = generators_ideal(c)
    if c.tag in _KOSZUL_TAGS:
        resolution = koszul(fs, S, class_tag=c.tag)
    elif c.tag is SemigroupClass.THREE_GEN_NON_SYMMETRIC:
        resolution = GradedResolution(S, c.tag, _chain(S, _three_gen_maps(S, c.data, fs)))
    elif c.tag is SemigroupClass.FOUR_GEN_SYMMETRIC_NON_CI:
        resolution = GradedResolution(S, c.tag, _chain(S, _bresinsky_maps(S, c.data, fs)))
    elif c.tag is SemigroupClass.FOUR_GEN_PSEUDOSYMMETRIC:
        resolution = GradedResolution(S, c.tag, _chain(S, _komeda_maps(S, c.data, fs)))
    else:  # pragma: no cover - exhaustive over tags
        raise UnsupportedClass(f"unhandled class {c.tag.value}")
    report = verify_complex(resolution)
    if not report.ok:
        raise VerificationFailure(f"constructed maps fail verification: {report}")
    return resolution


@dataclass
class ComplexReport:
    ok: bool
    product_failures: list = field(default_factory=list)
    grading_failures: list = field(default_factory=list)


def verify_complex(R: GradedResolution) -> ComplexReport:
    """Check that consecutive maps compose to zero and every matrix is
    graded; failures are reported, never raised."""
    weights = R.semigroup.generators
    report = ComplexReport(ok=True)
    for level, m in enumerate(R.maps, start=1):
        for i, j, expected, actual in m.grading_violations(weights):
            report.grading_failures.append((level, i, j, expected, actual))
    for level in range(len(R.maps) - 1):
        product = mat_mul(R.maps[level], R.maps[level + 1])
        for i, row in enumerate(product.entries):
            for j, p in enumerate(row):
                if not p.is_zero:
                    report.product_failures.append(
                        (level + 1, i, j, poly_to_str(p, weights))
                    )
    report.ok = not report.product_failures and not report.grading_failures
    return report


@dataclass
class PfaffianReport:
    ok: bool
    checks: list = field(default_factory=list)  # (name, passed)

    def failed(self) -> list[str]:
        return [name for name, passed in self.checks if not passed]


def verify_pfaffian(R: GradedResolution) -> PfaffianReport:
    """Structure checks for the 4-generated symmetric non-CI resolution:
    the middle matrix is alternating, its principal 4x4 pfaffians recover
    the binomial generators with alternating signs, the two leading
    principal minors are the squares of the first two generators, and the
    last map is the transpose of the first."""
    if R.class_tag is not SemigroupClass.FOUR_GEN_SYMMETRIC_NON_CI:
        raise UnsupportedClass("pfaffian structure applies to the 4-generated symmetric non-CI class")
    report = PfaffianReport(ok=True)
    fs = R.generator_polys()
    phi2 = R.maps[1].entries

    skew = all(
        phi2[i][j] == -phi2[j][i] for i in range(5) for j in range(i, 5)
    )
    report.checks.append(("phi2 alternating", skew))

    for i in range(5):
        rows = tuple(r for r in range(5) if r != i)
        sub = [[phi2[r][c] for c in rows] for r in rows]
        pf = pfaffian4(sub)
        expected = fs[i] if i % 2 == 0 else -fs[i]
        report.checks.append((f"pf(delta_{i + 1}{i + 1}) = {'-' if i % 2 else ''}f{i + 1}", pf == expected))

    for i in (0, 1):
        rows = tuple(r for r in range(5) if r != i)
        det = minor(phi2, rows, rows)
        report.checks.append((f"det(delta_{i + 1}{i + 1}) = f{i + 1}^2", det == fs[i] * fs[i]))

    report.checks.append(
        ("phi3 = transpose(phi1)", R.maps[2].entries == transpose_entries(R.maps[0].entries))
    )
    report.ok = all(passed for _, passed in report.checks)
    return report


def _leading(p: Poly):
    return max(p.terms.items(), key=lambda t: (sum(t[0]), t[0]))


def divide_exact(p: Poly, q: Poly) -> Poly | None:
    """Quotient p/q when q divides p exactly over Z, else None."""
    if q.is_zero:
        return None
    quotient = Poly.zero(p.nvars)
    lm_q, lc_q = _leading(q)
    while not p.is_zero:
        lm_p, lc_p = _leading(p)
        if lc_p % lc_q:
            return None
        mono = tuple(a - b for a, b in zip(lm_p, lm_q))
        if any(e < 0 for e in mono):
            return None
        term = Poly(p.nvars, {mono: lc_p // lc_q})
        quotient = quotient + term
        p = p - term * q
    return quotient


@dataclass
class MinorWitness:
    rows: tuple[int, ...]
    cols: tuple[int, ...]
    value: Poly
    description: str


@dataclass
class WitnessMinorReport:
    ok: bool
    two_minor_hits: dict = field(default_factory=dict)  # label -> (row pair, sign) or None
    product_witness: MinorWitness | None = None
    power_witness: MinorWitness | None = None
    coprime: bool | None = None


def verify_witness_minors(R: GradedResolution) -> WitnessMinorReport:
    """Witness checks for the pseudosymmetric resolution.

    Confirms that f1, f4, f5, x3*f2 and x3*f3 occur (up to sign) among the
    2x2 minors of the last map, then brute-forces the 4x4 minors of the
    middle map for a pair of coprime witnesses: one divisible by
    x2*f2*f4 and one of the shape x3^a * f3^e.
    """
    if R.class_tag is not SemigroupClass.FOUR_GEN_PSEUDOSYMMETRIC:
        raise UnsupportedClass("witness minors apply to the pseudosymmetric class")
    report = WitnessMinorReport(ok=True)
    fs = R.generator_polys()
    f1, f2, f3, f4, f5 = fs
    x2 = monomial(4, {2: 1})
    x3 = monomial(4, {3: 1})
    targets = {
        "f1": f1,
        "f4": f4,
        "f5": f5,
        "x3*f2": x3 * f2,
        "x3*f3": x3 * f3,
    }
    phi3 = R.maps[2].entries
    two_minors = {
        (r1, r2): minor(phi3, (r1, r2), (0, 1))
        for r1, r2 in combinations(range(6), 2)
    }
    for label, target in targets.items():
        hit = None
        for rows, value in two_minors.items():
            if value == target:
                hit = (tuple(r + 1 for r in rows), 1)
                break
            if value == -target:
                hit = (tuple(r + 1 for r in rows), -1)
                break
        report.two_minor_hits[label] = hit

    product_target = x2 * f2 * f4
    for (rows, cols), value in all_minors(R.maps[1], 4):
        if value.is_zero:
            continue
        if report.product_witness is None:
            quotient = divide_exact(value, product_target)
            if quotient is not None:
                extra = poly_to_str(quotient)
                description = "x2*f2*f4" + ("" if quotient == 1 else f" * ({extra})")
                report.product_witness = MinorWitness(rows, cols, value, description)
        if report.power_witness is None:
            stripped = value
            xpow = 0
            while True:
                nxt = divide_exact(stripped, x3)
                if nxt is None:
                    break
                stripped = nxt
                xpow += 1
            fpow = 0
            while True:
                nxt = divide_exact(stripped, f3)
                if nxt is None:
                    break
                stripped = nxt
                fpow += 1
            if fpow >= 1 and xpow >= 1 and (stripped == 1 or stripped == -1):
                sign = "-" if stripped == -1 else ""
                xs = "x3" if xpow == 1 else f"x3^{xpow}"
                description = f"{sign}{xs}*f3^{fpow}" if fpow > 1 else f"{sign}{xs}*f3"
                report.power_witness = MinorWitness(rows, cols, value, description)
        if report.product_witness is not None and report.power_witness is not None:
            break

    if report.product_witness is not None and report.power_witness is not None:
        w = report.product_witness.value
        report.coprime = divide_exact(w, x3) is None and divide_exact(w, f3) is None
    report.ok = (
        all(hit is not None for hit in report.two_minor_hits.values())
        and report.product_witness is not None
        and report.power_witness is not None
        and bool(report.coprime)
    )
    return report


@dataclass
class DualityReport:
    ok: bool
    top_degree: int
    violations: list = field(default_factory=list)


def duality_check(R: GradedResolution) -> DualityReport:
    """For symmetric classes: with every level sorted ascending and s0 the
    unique top degree, check s[i][j] + s[k-1-i][beta_i - 1 - j] == s0 and
    the Betti-number symmetry beta_i == beta_{k-1-i}."""
    if R.class_tag not in _SYMMETRIC_TAGS:
        raise UnsupportedClass("duality pairing applies to symmetric classes only")
    levels = R.betti_degrees
    top = levels[-1]
    report = DualityReport(ok=True, top_degree=top[0])
    if len(top) != 1:
        report.violations.append(("top level is not a single twist", top))
        report.ok = False
        return report
    s0 = top[0]
    length = len(levels) - 1
    for i in range(len(levels)):
        a, b = levels[i], levels[length - i]
        if len(a) != len(b):
            report.violations.append((f"beta_{i} != beta_{length - i}", (len(a), len(b))))
            continue
        for j in range(len(a)):
            if a[j] + b[len(b) - 1 - j] != s0:
                report.violations.append(
                    (f"pairing fails at level {i}, position {j + 1}", (a[j], b[len(b) - 1 - j]))
                )
    report.ok = not report.violations
    return report
