"""Strong indispensability of the minimal graded free resolution.

The working criterion: the resolution is strongly indispensable iff no
difference of two same-level Betti degrees lies in the semigroup (equal
degrees give difference 0, which always lies in the semigroup, so repeated
degrees fail immediately).  For symmetric semigroups the duality pairing
halves the work: only levels up to (k-1)/2 need checking.  Complete
intersections additionally admit closed-form uniqueness criteria on the
gluing data; :func:`cross_validate` runs both routes and insists they
agree.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .errors import CrossValidationMismatch, NotInSemigroup, UnsupportedClass
from .presentation import (
    Classification,
    SemigroupClass,
    ci4_splits,
    classify,
)
from .resolution import GradedResolution, resolve
from .semigroup import NumericalSemigroup, representations_of


class IndispMethod(str, Enum):
    DIFFERENCES = "DifferencesLemma"
    SYMMETRIC_HALF = "SymmetricHalfCheck"
    CI3 = "CI3Criterion"
    CI4 = "CI4Criterion"
    ALWAYS_4SYM = "AlwaysTrue4SymNonCI"
    PSEUDO_12 = "PseudoLevels12"


class UniquenessStatus(str, Enum):
    UNIQUE_AND_POSITIVE = "unique_and_positive"
    NOT_UNIQUE = "not_unique"
    HAS_FORBIDDEN_ZERO = "has_forbidden_zero"


@dataclass(frozen=True)
class Witness:
    level: int
    pair: tuple[int, int]
    diff: int
    in_semigroup: bool


@dataclass(frozen=True)
class IndispensabilityReport:
    verdict: bool
    method: IndispMethod
    witnesses: tuple[Witness, ...]
    levels_checked: tuple[int, ...]

    def to_json(self) -> dict:
        return {
            "verdict": self.verdict,
            "method": self.method.value,
            "witnesses": [
                {
                    "level": w.level,
                    "pair": list(w.pair),
                    "diff": w.diff,
                    "in_semigroup": w.in_semigroup,
                }
                for w in self.witnesses
            ],
            "levels_checked": list(self.levels_checked),
        }


def differences_check(
    R: GradedResolution,
    S: NumericalSemigroup | None = None,
    levels=None,
    method: IndispMethod = IndispMethod.DIFFERENCES,
) -> IndispensabilityReport:
    """Test every unordered pair of same-level Betti degrees at the
    requested levels; the verdict is True iff no difference lies in S.
    Pairs are reported with 1-based positions into the ascending degree
    list; failing pairs are the witnesses."""
    if S is None:
        S = R.semigroup
    if levels is None:
        levels = range(1, R.length + 1)
    levels = tuple(sorted(levels))
    witnesses = []
    degrees = R.betti_degrees
    for level in levels:
        level_degrees = degrees[level]
        for j in range(len(level_degrees)):
            for jp in range(j + 1, len(level_degrees)):
                diff = level_degrees[jp] - level_degrees[j]
                if S.contains(diff):
                    witnesses.append(Witness(level, (j + 1, jp + 1), diff, True))
    return IndispensabilityReport(
        verdict=not witnesses,
        method=method,
        witnesses=tuple(witnesses),
        levels_checked=levels,
    )


@dataclass(frozen=True)
class UniquenessResult:
    status: UniquenessStatus
    representations: tuple[tuple[int, ...], ...]


def _classify_reps(reps, constraint: str) -> UniquenessStatus:
    if len(reps) != 1:
        return UniquenessStatus.NOT_UNIQUE
    rep = reps[0]
    zeros = sum(1 for c in rep if c == 0)
    if constraint == "all_nonzero":
        allowed = 0
    elif constraint == "at_most_one_zero":
        allowed = 1
    else:
        raise ValueError(f"unknown constraint {constraint!r}")
    if zeros > allowed:
        return UniquenessStatus.HAS_FORBIDDEN_ZERO
    return UniquenessStatus.UNIQUE_AND_POSITIVE


def uniqueness_check(target: int, base, constraint: str = "all_nonzero") -> UniquenessResult:
    """Brute-force all representations of ``target`` over ``base`` and
    classify them: unique and satisfying the zero-pattern constraint,
    not unique, or unique but with too many zero coordinates."""
    reps, _ = representations_of(target, tuple(base))
    if not reps:
        raise NotInSemigroup(f"{target} is not representable over {tuple(base)}")
    return UniquenessResult(_classify_reps(reps, constraint), tuple(reps))


def _criterion_report(verdict: bool, method: IndispMethod) -> IndispensabilityReport:
    return IndispensabilityReport(verdict, method, (), ())


def _split_condition(d) -> bool:
    """Uniqueness conditions on one complete-intersection split: the inner
    pair representation unique and all-positive plus, for a three-plus-one
    gluing, the glued representation unique with at most one zero."""
    if d.case == "I":
        return (
            _classify_reps(d.inner.representations, "all_nonzero")
            is UniquenessStatus.UNIQUE_AND_POSITIVE
            and _classify_reps(d.representations, "at_most_one_zero")
            is UniquenessStatus.UNIQUE_AND_POSITIVE
        )
    return (
        _classify_reps(d.reps_first, "all_nonzero")
        is UniquenessStatus.UNIQUE_AND_POSITIVE
        and _classify_reps(d.reps_second, "all_nonzero")
        is UniquenessStatus.UNIQUE_AND_POSITIVE
    )


def strong_indisp(
    S: NumericalSemigroup, classification: Classification | None = None
) -> IndispensabilityReport:
    """Per-class verdict.

    2-generated and 4-generated symmetric non-CI semigroups always pass.
    Complete intersections use the uniqueness criteria on their split data;
    for 4 generators the conditions are required on every split, because a
    semigroup can admit several and a single split's conditions can hold
    while another split (and the resolution itself) rules indispensability
    out.  3-generated non-symmetric semigroups always pass; this is
    asserted by running the differences check, so an unexpected
    counterexample would be reported rather than suppressed.
    Pseudosymmetric semigroups check the differences at levels 1 and 2
    only: the two top degrees differ by half the Frobenius number, which is
    never in S.
    """
    c = classification if classification is not None else classify(S)
    if c.tag is SemigroupClass.UNSUPPORTED:
        raise UnsupportedClass(f"no indispensability criterion for {S!r}")
    if c.tag is SemigroupClass.TWO_GEN:
        return differences_check(resolve(S, c), S, levels=(1,))
    if c.tag is SemigroupClass.THREE_GEN_NON_SYMMETRIC:
        return differences_check(resolve(S, c), S, levels=(1, 2))
    if c.tag is SemigroupClass.THREE_GEN_SYMMETRIC_CI:
        status = _classify_reps(c.data.representations, "all_nonzero")
        return _criterion_report(
            status is UniquenessStatus.UNIQUE_AND_POSITIVE, IndispMethod.CI3
        )
    if c.tag is SemigroupClass.FOUR_GEN_CI:
        splits = ci4_splits(S)
        if not splits:
            raise UnsupportedClass(f"{S!r} has no complete-intersection split")
        verdict = all(_split_condition(d) for d in splits)
        return _criterion_report(verdict, IndispMethod.CI4)
    if c.tag is SemigroupClass.FOUR_GEN_SYMMETRIC_NON_CI:
        return _criterion_report(True, IndispMethod.ALWAYS_4SYM)
    if c.tag is SemigroupClass.FOUR_GEN_PSEUDOSYMMETRIC:
        return differences_check(
            resolve(S, c), S, levels=(1, 2), method=IndispMethod.PSEUDO_12
        )
    raise UnsupportedClass(f"unhandled class {c.tag.value}")  # pragma: no cover


_DIFF_LEVELS = {
    SemigroupClass.TWO_GEN: ((1,), IndispMethod.DIFFERENCES),
    SemigroupClass.THREE_GEN_NON_SYMMETRIC: ((1, 2), IndispMethod.DIFFERENCES),
    SemigroupClass.THREE_GEN_SYMMETRIC_CI: ((1,), IndispMethod.SYMMETRIC_HALF),
    SemigroupClass.FOUR_GEN_CI: ((1,), IndispMethod.SYMMETRIC_HALF),
    SemigroupClass.FOUR_GEN_SYMMETRIC_NON_CI: ((1,), IndispMethod.SYMMETRIC_HALF),
    SemigroupClass.FOUR_GEN_PSEUDOSYMMETRIC: ((1, 2), IndispMethod.PSEUDO_12),
}


@dataclass(frozen=True)
class CrossValidationReport:
    tag: SemigroupClass
    criterion: IndispensabilityReport
    differences: IndispensabilityReport
    agree: bool


def cross_validate(S: NumericalSemigroup) -> CrossValidationReport:
    """Compute the verdict twice, via the class criterion and via the
    Betti-degree differences on the built resolution, and insist the two
    agree.  Disagreement raises :class:`CrossValidationMismatch` with both
    reports attached."""
    c = classify(S)
    if c.tag is SemigroupClass.UNSUPPORTED:
        raise UnsupportedClass(f"cannot cross-validate {S!r}")
    criterion = strong_indisp(S, c)
    levels, method = _DIFF_LEVELS[c.tag]
    resolution = resolve(S, c)
    levels = tuple(l for l in levels if l <= resolution.length)
    diff = differences_check(resolution, S, levels=levels, method=method)
    if criterion.verdict != diff.verdict:
        raise CrossValidationMismatch(
            f"{S!r}: criterion says {criterion.verdict}, differences say {diff.verdict}",
            criterion=criterion,
            differences=diff,
        )
    return CrossValidationReport(c.tag, criterion, diff, True)
