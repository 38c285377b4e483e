"""Classification of semigroups of embedding dimension at most 4 and
extraction of the defining parameters of their toric ideals.

Supported classes and their parameter records:

* 2 generators: principal ideal, no parameters.
* 3 generators, symmetric: complete intersection split
  ``S = <d*m1, d*m2, c1*m1 + c2*m2>`` (:class:`CI3Data`).
* 3 generators, not symmetric: Herzog parameters ``alpha_i``, ``alpha_ij``
  with ``alpha_i*n_i = alpha_ik*n_k + alpha_il*n_l`` (:class:`HerzogData`).
* 4 generators, complete intersection: a gluing of a symmetric 3-generated
  semigroup with one extra generator (case I) or of two 2-generated
  semigroups (case II) (:class:`CI4CaseI` / :class:`CI4CaseII`).
* 4 generators, symmetric, not CI: Bresinsky parameters (:class:`BresinskyData`).
* 4 generators, pseudosymmetric: Komeda parameters (:class:`KomedaData`).

The Bresinsky and Komeda parametrizations are index-sensitive: they are
extracted for the generator order exactly as given.  A semigroup presented
in an order that does not fit the shape classifies as ``Unsupported`` even
if some permutation of its generators would fit.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from itertools import product
from typing import Optional, Union

from .errors import (
    InvalidParameters,
    NotInClass,
    SgresError,
    UnsupportedClass,
    UnsupportedEmbeddingDimension,
)
from .polyalg import Poly, monomial
from .semigroup import (
    NumericalSemigroup,
    SymmetryType,
    is_representable,
    representations_of,
)


class SemigroupClass(str, Enum):
    TWO_GEN = "TwoGen"
    THREE_GEN_SYMMETRIC_CI = "ThreeGenSymmetricCI"
    THREE_GEN_NON_SYMMETRIC = "ThreeGenNonSymmetric"
    FOUR_GEN_CI = "FourGenCI"
    FOUR_GEN_SYMMETRIC_NON_CI = "FourGenSymmetricNonCI"
    FOUR_GEN_PSEUDOSYMMETRIC = "FourGenPseudosymmetric"
    UNSUPPORTED = "Unsupported"


@dataclass(frozen=True)
class HerzogData:
    """alpha[i-1] is the least t with t*n_i in the span of the other two;
    alpha_ij are the coefficients of the resulting representation."""

    alpha: tuple[int, int, int]
    alpha12: int
    alpha13: int
    alpha21: int
    alpha23: int
    alpha31: int
    alpha32: int
    ambiguous: bool = False


@dataclass(frozen=True)
class CI3Data:
    """Split of a symmetric 3-generated semigroup.

    ``perm`` holds 1-based original generator positions (i, j, l) with
    ``d = gcd(n_i, n_j)``, ``m1 = n_i/d``, ``m2 = n_j/d`` and
    ``n_l = c1*m1 + c2*m2`` for every ``(c1, c2)`` in ``representations``.
    """

    perm: tuple[int, int, int]
    d: int
    m1: int
    m2: int
    representations: tuple[tuple[int, int], ...]
    designated: tuple[int, int]
    ambiguous: bool


@dataclass(frozen=True)
class BresinskyData:
    alpha: tuple[int, int, int, int]
    alpha21: int
    alpha31: int
    alpha32: int
    alpha42: int
    alpha13: int
    alpha43: int
    alpha14: int
    alpha24: int
    ambiguous: bool = False

    def ij_tuple(self) -> tuple[int, ...]:
        return (
            self.alpha21,
            self.alpha31,
            self.alpha32,
            self.alpha42,
            self.alpha13,
            self.alpha43,
            self.alpha14,
            self.alpha24,
        )


@dataclass(frozen=True)
class KomedaData:
    alpha: tuple[int, int, int, int]
    alpha21: int


@dataclass(frozen=True)
class CI4CaseI:
    """Gluing of a symmetric 3-generated semigroup with one generator.

    ``perm`` holds 1-based original positions (i, j, k, h): the triple
    (n_i, n_j, n_k) has gcd ``ell`` and ``ell * n_h`` is represented over
    the triple by each tuple in ``representations``.  ``inner`` describes
    the scaled-down triple; its ``perm`` is relative to the triple order.
    """

    perm: tuple[int, int, int, int]
    ell: int
    inner: CI3Data
    representations: tuple[tuple[int, int, int], ...]
    designated: tuple[int, int, int]
    ambiguous: bool
    alternate: Optional["CI4CaseII"] = None

    case = "I"


@dataclass(frozen=True)
class CI4CaseII:
    """Gluing of two 2-generated semigroups.

    ``perm`` holds 1-based original positions (i, j, k, l) with
    ``p = gcd(n_i, n_j)``, ``q = gcd(n_k, n_l)``, reduced generators
    ``m = (n_i/p, n_j/p, n_k/q, n_l/q)``, and ``q = p1*m1 + p2*m2``,
    ``p = p3*m3 + p4*m4`` over ``reps_first`` / ``reps_second``.
    """

    perm: tuple[int, int, int, int]
    p: int
    q: int
    m: tuple[int, int, int, int]
    reps_first: tuple[tuple[int, int], ...]
    reps_second: tuple[tuple[int, int], ...]
    designated: tuple[int, int, int, int]
    ambiguous: bool
    alternate: Optional["CI4CaseI"] = None

    case = "II"


CI4Data = Union[CI4CaseI, CI4CaseII]
ClassData = Union[HerzogData, CI3Data, BresinskyData, KomedaData, CI4CaseI, CI4CaseII, None]


@dataclass(frozen=True)
class Classification:
    semigroup: NumericalSemigroup
    tag: SemigroupClass
    data: ClassData


def _min_multiple(n: int, others: tuple[int, ...]) -> int:
    """Least t >= 1 with t*n representable over ``others``."""
    cap = math.prod(others)
    for t in range(1, cap + 1):
        if is_representable(t * n, others):
            return t
    raise SgresError(f"no multiple of {n} found over {others}")  # unreachable


def herzog(S: NumericalSemigroup) -> HerzogData:
    """Parameters of a 3-generated non-symmetric semigroup.

    Raises :class:`NotInClass` when no all-positive coefficient choice
    satisfies the three sum identities, which happens exactly in the
    symmetric case.
    """
    n = S.generators
    if len(n) != 3:
        raise NotInClass("herzog extraction needs exactly 3 generators")
    alpha = []
    candidates = []
    for i in range(3):
        others = tuple(x for j, x in enumerate(n) if j != i)
        a_i = _min_multiple(n[i], others)
        alpha.append(a_i)
        reps, _ = representations_of(a_i * n[i], others)
        positive = [r for r in reps if r[0] > 0 and r[1] > 0]
        if not positive:
            raise NotInClass(
                f"{a_i}*{n[i]} has no all-positive representation; semigroup is symmetric"
            )
        candidates.append(positive)
    a1, a2, a3 = alpha
    valid = []
    for (a12, a13), (a21, a23), (a31, a32) in product(*candidates):
        if a21 + a31 == a1 and a12 + a32 == a2 and a13 + a23 == a3:
            valid.append((a12, a13, a21, a23, a31, a32))
    if not valid:
        raise NotInClass("coefficient sums do not close up; semigroup is symmetric")
    valid.sort()
    a12, a13, a21, a23, a31, a32 = valid[0]
    return HerzogData(
        alpha=(a1, a2, a3),
        alpha12=a12,
        alpha13=a13,
        alpha21=a21,
        alpha23=a23,
        alpha31=a31,
        alpha32=a32,
        ambiguous=len(valid) > 1,
    )


def ci3(S: NumericalSemigroup) -> CI3Data:
    """Split of a symmetric 3-generated semigroup.

    Scans index pairs in a fixed order for gcd > 1 with the third generator
    representable over the reduced pair.  All representations are kept; the
    designated one is the all-positive representation when it is the only
    such, otherwise the lexicographically smallest.
    """
    n = S.generators
    if len(n) != 3:
        raise NotInClass("ci3 extraction needs exactly 3 generators")
    for i, j in ((0, 1), (0, 2), (1, 2)):
        l = 3 - i - j
        d = math.gcd(n[i], n[j])
        if d <= 1:
            continue
        m1, m2 = n[i] // d, n[j] // d
        if not is_representable(n[l], (m1, m2)):
            continue
        reps, _ = representations_of(n[l], (m1, m2))
        positive = [r for r in reps if r[0] > 0 and r[1] > 0]
        if len(positive) == 1:
            designated = positive[0]
        else:
            designated = reps[0]
        return CI3Data(
            perm=(i + 1, j + 1, l + 1),
            d=d,
            m1=m1,
            m2=m2,
            representations=tuple(reps),
            designated=designated,
            ambiguous=len(reps) > 1,
        )
    raise NotInClass("no complete-intersection split; semigroup is not symmetric")


_BRESINSKY_SHAPES = {
    # f_i uses the generator pair (j1, j2), 1-based
    1: (3, 4),
    2: (1, 4),
    3: (1, 2),
    4: (2, 3),
}


def bresinsky(S: NumericalSemigroup) -> BresinskyData:
    """Parameters of a 4-generated symmetric non-complete-intersection
    semigroup, for the generator order exactly as given."""
    n = S.generators
    if len(n) != 4:
        raise NotInClass("bresinsky extraction needs exactly 4 generators")
    alpha = []
    for i in range(4):
        others = tuple(x for j, x in enumerate(n) if j != i)
        alpha.append(_min_multiple(n[i], others))
    a1, a2, a3, a4 = alpha
    per_shape = []
    for i in range(1, 5):
        j1, j2 = _BRESINSKY_SHAPES[i]
        target = alpha[i - 1] * n[i - 1]
        reps, _ = representations_of(target, (n[j1 - 1], n[j2 - 1]))
        positive = [r for r in reps if r[0] > 0 and r[1] > 0]
        if not positive:
            raise NotInClass(f"binomial shape for generator {i} has no positive representation")
        per_shape.append(positive)
    valid = []
    for (a13, a14), (a21, a24), (a31, a32), (a42, a43) in product(*per_shape):
        if a21 + a31 != a1 or a32 + a42 != a2 or a13 + a43 != a3 or a14 + a24 != a4:
            continue
        if n[0] != a2 * a3 * a14 + a32 * a13 * a24:
            continue
        if n[1] != a3 * a4 * a21 + a31 * a43 * a24:
            continue
        if n[2] != a1 * a4 * a32 + a14 * a42 * a31:
            continue
        if n[3] != a1 * a2 * a43 + a42 * a21 * a13:
            continue
        valid.append((a21, a31, a32, a42, a13, a43, a14, a24))
    if not valid:
        raise NotInClass("no consistent parameter set; semigroup is not in this class")
    valid.sort()
    a21, a31, a32, a42, a13, a43, a14, a24 = valid[0]
    return BresinskyData(
        alpha=(a1, a2, a3, a4),
        alpha21=a21,
        alpha31=a31,
        alpha32=a32,
        alpha42=a42,
        alpha13=a13,
        alpha43=a43,
        alpha14=a14,
        alpha24=a24,
        ambiguous=len(valid) > 1,
    )


def komeda(S: NumericalSemigroup) -> KomedaData:
    """Parameters of a 4-generated pseudosymmetric semigroup, for the
    generator order exactly as given."""
    n = S.generators
    if len(n) != 4:
        raise NotInClass("komeda extraction needs exactly 4 generators")
    n1, n2, n3, n4 = n
    alpha = []
    for i in range(4):
        others = tuple(x for j, x in enumerate(n) if j != i)
        alpha.append(_min_multiple(n[i], others))
    a1, a2, a3, a4 = alpha
    num = a2 * n2 - n4
    if num <= 0 or num % n1:
        raise NotInClass("second binomial shape does not fit")
    a21 = num // n1
    if not 1 <= a21 < a1:
        raise NotInClass("derived alpha21 is out of range")
    checks = (
        n1 == a2 * a3 * (a4 - 1) + 1,
        n2 == a21 * a3 * a4 + (a1 - a21 - 1) * (a3 - 1) + a3,
        n3 == a1 * a4 + (a1 - a21 - 1) * (a2 - 1) * (a4 - 1) - a4 + 1,
        n4 == a1 * a2 * (a3 - 1) + a21 * (a2 - 1) + a2,
        a1 * n1 == n3 + (a4 - 1) * n4,
        a3 * n3 == (a1 - a21 - 1) * n1 + n2,
        a4 * n4 == n1 + (a2 - 1) * n2 + (a3 - 1) * n3,
        (a3 - 1) * n3 + (a21 + 1) * n1 == n2 + (a4 - 1) * n4,
    )
    if not all(checks):
        raise NotInClass("generator formulas do not hold for this order")
    return KomedaData(alpha=(a1, a2, a3, a4), alpha21=a21)


def from_komeda(a1: int, a2: int, a3: int, a4: int, a21: int) -> NumericalSemigroup:
    """Semigroup generated by the Komeda formulas; rejects parameter tuples
    whose output fails positivity, gcd 1 or minimal generation."""
    if min(a1, a2, a3, a4, a21) < 1 or a21 >= a1:
        raise InvalidParameters("need positive alphas with alpha21 < alpha1")
    n1 = a2 * a3 * (a4 - 1) + 1
    n2 = a21 * a3 * a4 + (a1 - a21 - 1) * (a3 - 1) + a3
    n3 = a1 * a4 + (a1 - a21 - 1) * (a2 - 1) * (a4 - 1) - a4 + 1
    n4 = a1 * a2 * (a3 - 1) + a21 * (a2 - 1) + a2
    if min(n1, n2, n3, n4) <= 0:
        raise InvalidParameters(f"formulas give nonpositive generators {(n1, n2, n3, n4)}")
    try:
        return NumericalSemigroup((n1, n2, n3, n4))
    except SgresError as exc:
        raise InvalidParameters(f"generators {(n1, n2, n3, n4)}: {exc}") from exc


def from_bresinsky(alpha_ij) -> NumericalSemigroup:
    """Semigroup generated by the Bresinsky formulas from the eight
    coefficients (a21, a31, a32, a42, a13, a43, a14, a24)."""
    a21, a31, a32, a42, a13, a43, a14, a24 = alpha_ij
    if min(alpha_ij) < 1:
        raise InvalidParameters("all eight coefficients must be positive")
    a1 = a21 + a31
    a2 = a32 + a42
    a3 = a13 + a43
    a4 = a14 + a24
    n1 = a2 * a3 * a14 + a32 * a13 * a24
    n2 = a3 * a4 * a21 + a31 * a43 * a24
    n3 = a1 * a4 * a32 + a14 * a42 * a31
    n4 = a1 * a2 * a43 + a42 * a21 * a13
    try:
        return NumericalSemigroup((n1, n2, n3, n4))
    except SgresError as exc:
        raise InvalidParameters(f"generators {(n1, n2, n3, n4)}: {exc}") from exc


def _case_i_splits(S: NumericalSemigroup) -> list[CI4CaseI]:
    n = S.generators
    out = []
    for h in (3, 2, 1, 0):
        triple_idx = tuple(t for t in range(4) if t != h)
        triple = tuple(n[t] for t in triple_idx)
        ell = math.gcd(*triple)
        if ell <= 1:
            continue
        reduced = tuple(x // ell for x in triple)
        try:
            inner_semigroup = NumericalSemigroup(reduced)
        except SgresError:
            continue
        if not inner_semigroup.contains(n[h]):
            continue
        if inner_semigroup.symmetry_type() is not SymmetryType.SYMMETRIC:
            continue
        inner = ci3(inner_semigroup)
        reps, _ = representations_of(ell * n[h], triple)
        out.append(
            CI4CaseI(
                perm=tuple(t + 1 for t in triple_idx) + (h + 1,),
                ell=ell,
                inner=inner,
                representations=tuple(reps),
                designated=reps[0],
                ambiguous=len(reps) > 1,
            )
        )
    return out


def _case_ii_splits(S: NumericalSemigroup) -> list[CI4CaseII]:
    n = S.generators
    out = []
    for (i, j), (k, l) in (((0, 1), (2, 3)), ((0, 2), (1, 3)), ((0, 3), (1, 2))):
        p = math.gcd(n[i], n[j])
        q = math.gcd(n[k], n[l])
        if p <= 1 or q <= 1:
            continue
        m1, m2 = n[i] // p, n[j] // p
        m3, m4 = n[k] // q, n[l] // q
        if not (is_representable(q, (m1, m2)) and is_representable(p, (m3, m4))):
            continue
        reps_first, _ = representations_of(q, (m1, m2))
        reps_second, _ = representations_of(p, (m3, m4))
        out.append(
            CI4CaseII(
                perm=(i + 1, j + 1, k + 1, l + 1),
                p=p,
                q=q,
                m=(m1, m2, m3, m4),
                reps_first=tuple(reps_first),
                reps_second=tuple(reps_second),
                designated=reps_first[0] + reps_second[0],
                ambiguous=len(reps_first) > 1 or len(reps_second) > 1,
            )
        )
    return out


def ci4_splits(S: NumericalSemigroup) -> list[CI4Data]:
    """Every complete-intersection split of a 4-generated semigroup, case I
    splits first.  Empty when the semigroup is not a complete intersection.

    A single semigroup can admit several splits, and uniqueness properties
    of the split data are not split-invariant; criteria built on them must
    quantify over this whole list.
    """
    if S.embedding_dimension != 4:
        return []
    return list(_case_i_splits(S)) + list(_case_ii_splits(S))


def ci4(S: NumericalSemigroup) -> CI4Data | None:
    """Preferred complete-intersection split of a 4-generated semigroup,
    or None.  Case I is preferred; when both cases match, the first case II
    split is kept on the ``alternate`` field."""
    if S.embedding_dimension != 4:
        return None
    case_i = _case_i_splits(S)
    case_ii = _case_ii_splits(S)
    if case_i:
        first = case_i[0]
        if case_ii:
            return CI4CaseI(
                perm=first.perm,
                ell=first.ell,
                inner=first.inner,
                representations=first.representations,
                designated=first.designated,
                ambiguous=first.ambiguous,
                alternate=case_ii[0],
            )
        return first
    return case_ii[0] if case_ii else None


def classify(S: NumericalSemigroup) -> Classification:
    """Dispatch a semigroup of embedding dimension <= 4 into its class.

    Raises :class:`UnsupportedEmbeddingDimension` outside 2 <= k <= 4.
    """
    k = S.embedding_dimension
    if k == 2:
        return Classification(S, SemigroupClass.TWO_GEN, None)
    if k == 3:
        if S.symmetry_type() is SymmetryType.SYMMETRIC:
            return Classification(S, SemigroupClass.THREE_GEN_SYMMETRIC_CI, ci3(S))
        return Classification(S, SemigroupClass.THREE_GEN_NON_SYMMETRIC, herzog(S))
    if k == 4:
        split = ci4(S)
        if split is not None:
            return Classification(S, SemigroupClass.FOUR_GEN_CI, split)
        symmetry = S.symmetry_type()
        if symmetry is SymmetryType.SYMMETRIC:
            try:
                return Classification(
                    S, SemigroupClass.FOUR_GEN_SYMMETRIC_NON_CI, bresinsky(S)
                )
            except NotInClass:
                return Classification(S, SemigroupClass.UNSUPPORTED, None)
        if symmetry is SymmetryType.PSEUDOSYMMETRIC:
            try:
                return Classification(
                    S, SemigroupClass.FOUR_GEN_PSEUDOSYMMETRIC, komeda(S)
                )
            except NotInClass:
                return Classification(S, SemigroupClass.UNSUPPORTED, None)
        return Classification(S, SemigroupClass.UNSUPPORTED, None)
    raise UnsupportedEmbeddingDimension(
        f"embedding dimension {k} is outside the supported range 2..4"
    )


def _ci3_binomials(nvars: int, data: CI3Data, var_of: dict[int, int]) -> list[Poly]:
    # var_of maps the split's 1-based positions to 1-based variable indices
    i, j, l = (var_of[t] for t in data.perm)
    c1, c2 = data.designated
    f1 = monomial(nvars, {i: data.m2}) - monomial(nvars, {j: data.m1})
    f2 = monomial(nvars, {l: data.d}) - monomial(nvars, {i: c1, j: c2})
    return [f1, f2]


def generators_ideal(c: Classification) -> list[Poly]:
    """The binomial generators of the toric ideal for a classified semigroup,
    each homogeneous for the weighting by generators."""
    S = c.semigroup
    n = S.generators
    if c.tag is SemigroupClass.TWO_GEN:
        return [monomial(2, {1: n[1]}) - monomial(2, {2: n[0]})]
    if c.tag is SemigroupClass.THREE_GEN_SYMMETRIC_CI:
        return _ci3_binomials(3, c.data, {1: 1, 2: 2, 3: 3})
    if c.tag is SemigroupClass.THREE_GEN_NON_SYMMETRIC:
        d = c.data
        a1, a2, a3 = d.alpha
        return [
            monomial(3, {1: a1}) - monomial(3, {2: d.alpha12, 3: d.alpha13}),
            monomial(3, {2: a2}) - monomial(3, {1: d.alpha21, 3: d.alpha23}),
            monomial(3, {3: a3}) - monomial(3, {1: d.alpha31, 2: d.alpha32}),
        ]
    if c.tag is SemigroupClass.FOUR_GEN_CI:
        d = c.data
        if d.case == "I":
            i, j, kk, h = d.perm
            var_of = {1: i, 2: j, 3: kk}
            f1, f2 = _ci3_binomials(4, d.inner, var_of)
            a41, a42, a43 = d.designated
            f3 = monomial(4, {h: d.ell}) - monomial(4, {i: a41, j: a42, kk: a43})
            return [f1, f2, f3]
        i, j, kk, l = d.perm
        m1, m2, m3, m4 = d.m
        p1, p2, p3, p4 = d.designated
        return [
            monomial(4, {i: m2}) - monomial(4, {j: m1}),
            monomial(4, {kk: m4}) - monomial(4, {l: m3}),
            monomial(4, {i: p1, j: p2}) - monomial(4, {kk: p3, l: p4}),
        ]
    if c.tag is SemigroupClass.FOUR_GEN_SYMMETRIC_NON_CI:
        d = c.data
        a1, a2, a3, a4 = d.alpha
        return [
            monomial(4, {1: a1}) - monomial(4, {3: d.alpha13, 4: d.alpha14}),
            monomial(4, {2: a2}) - monomial(4, {1: d.alpha21, 4: d.alpha24}),
            monomial(4, {3: a3}) - monomial(4, {1: d.alpha31, 2: d.alpha32}),
            monomial(4, {4: a4}) - monomial(4, {2: d.alpha42, 3: d.alpha43}),
            monomial(4, {3: d.alpha43, 1: d.alpha21})
            - monomial(4, {2: d.alpha32, 4: d.alpha14}),
        ]
    if c.tag is SemigroupClass.FOUR_GEN_PSEUDOSYMMETRIC:
        d = c.data
        a1, a2, a3, a4 = d.alpha
        a21 = d.alpha21
        return [
            monomial(4, {1: a1}) - monomial(4, {3: 1, 4: a4 - 1}),
            monomial(4, {2: a2}) - monomial(4, {1: a21, 4: 1}),
            monomial(4, {3: a3}) - monomial(4, {1: a1 - a21 - 1, 2: 1}),
            monomial(4, {4: a4}) - monomial(4, {1: 1, 2: a2 - 1, 3: a3 - 1}),
            monomial(4, {3: a3 - 1, 1: a21 + 1}) - monomial(4, {2: 1, 4: a4 - 1}),
        ]
    raise UnsupportedClass(f"no binomial generators for class {c.tag.value}")
