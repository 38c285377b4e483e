"""Enumeration of small semigroups for batch scanning and exhaustive checks.

Tuples are enumerated sorted ascending and deduplicated by construction, so
each semigroup appears once per generator multiset.  Minimality is decided
with bitmask reachability spans, which keeps exhaustive scans up to
generator bound 60 cheap.
"""

from __future__ import annotations

import math
from itertools import permutations, product

from .errors import InvalidParameters, NotInClass
from .indispensability import strong_indisp
from .presentation import (
    Classification,
    SemigroupClass,
    bresinsky,
    ci4,
    classify,
    from_bresinsky,
    from_komeda,
    komeda,
)
from .semigroup import NumericalSemigroup, SymmetryType, is_representable


def _span_mask(gens, bound: int) -> int:
    """Bit i set iff i <= bound is a nonnegative combination of gens."""
    mask = (1 << (bound + 1)) - 1
    span = 1
    for g in gens:
        while True:
            grown = (span | (span << g)) & mask
            if grown == span:
                break
            span = grown
    return span


def _minimal_pairs(max_gen: int):
    for a in range(2, max_gen + 1):
        for b in range(a + 1, max_gen + 1):
            if b % a:
                yield a, b


def _minimal_triples(max_gen: int):
    for a, b in _minimal_pairs(max_gen):
        span_ab = _span_mask((a, b), max_gen)
        for c in range(b + 1, max_gen + 1):
            if not (span_ab >> c) & 1:
                yield a, b, c


def minimal_coprime_tuples(max_gen: int, dim: int):
    """Sorted minimal generating tuples with gcd 1 and entries <= max_gen."""
    if dim == 2:
        for a, b in _minimal_pairs(max_gen):
            if math.gcd(a, b) == 1:
                yield (a, b)
    elif dim == 3:
        for a, b, c in _minimal_triples(max_gen):
            if math.gcd(math.gcd(a, b), c) == 1:
                yield (a, b, c)
    elif dim == 4:
        for a, b, c in _minimal_triples(max_gen):
            g3 = math.gcd(math.gcd(a, b), c)
            span3 = _span_mask((a, b, c), max_gen)
            for d in range(c + 1, max_gen + 1):
                if not (span3 >> d) & 1 and math.gcd(g3, d) == 1:
                    yield (a, b, c, d)
    else:
        raise ValueError("dim must be 2, 3 or 4")


def has_symmetric_split(gens) -> bool:
    """Order-free test that a triple splits as a complete intersection,
    which characterizes symmetry for 3 generators."""
    for i, j in ((0, 1), (0, 2), (1, 2)):
        l = 3 - i - j
        d = math.gcd(gens[i], gens[j])
        if d > 1 and is_representable(gens[l], (gens[i] // d, gens[j] // d)):
            return True
    return False


def _ci_prefilter(t) -> bool:
    # necessary gcd conditions for either complete-intersection split
    for h in range(4):
        triple = tuple(x for k, x in enumerate(t) if k != h)
        if math.gcd(*triple) > 1:
            return True
    for (i, j), (k, l) in (((0, 1), (2, 3)), ((0, 2), (1, 3)), ((0, 3), (1, 2))):
        if math.gcd(t[i], t[j]) > 1 and math.gcd(t[k], t[l]) > 1:
            return True
    return False


def ci_semigroups(max_gen: int):
    """All complete-intersection semigroups with 3 or 4 minimal generators
    bounded by ``max_gen``: (three_generated, four_generated)."""
    three = [
        NumericalSemigroup(t)
        for t in minimal_coprime_tuples(max_gen, 3)
        if has_symmetric_split(t)
    ]
    four = []
    for t in minimal_coprime_tuples(max_gen, 4):
        if not _ci_prefilter(t):
            continue
        S = NumericalSemigroup(t)
        if ci4(S) is not None:
            four.append(S)
    return three, four


def classify_with_permutations(gens) -> Classification:
    """Classify a generator multiset, searching role orders when needed.

    The given order is tried first.  Only the 4-generated symmetric non-CI
    and pseudosymmetric parametrizations are order-sensitive, so those are
    re-tried over permutations when the given order classifies Unsupported.
    """
    S = NumericalSemigroup(tuple(gens))
    c = classify(S)
    if c.tag is not SemigroupClass.UNSUPPORTED or S.embedding_dimension != 4:
        return c
    symmetry = S.symmetry_type()
    if symmetry is SymmetryType.SYMMETRIC:
        extract, tag = bresinsky, SemigroupClass.FOUR_GEN_SYMMETRIC_NON_CI
    elif symmetry is SymmetryType.PSEUDOSYMMETRIC:
        extract, tag = komeda, SemigroupClass.FOUR_GEN_PSEUDOSYMMETRIC
    else:
        return c
    for perm in permutations(S.generators):
        if perm == S.generators:
            continue
        reordered = NumericalSemigroup(perm)
        try:
            data = extract(reordered)
        except NotInClass:
            continue
        return Classification(reordered, tag, data)
    return c


def record_for(c: Classification) -> dict:
    """One scan line: generators, class, Frobenius number, type, verdict."""
    S = c.semigroup
    record = {
        "generators": list(S.generators),
        "class": c.tag.value,
        "frobenius": S.frobenius(),
        "type": len(S.pseudofrobenius()),
    }
    if c.tag is SemigroupClass.UNSUPPORTED:
        record["strongly_indispensable"] = None
        record["witnesses"] = []
    else:
        report = strong_indisp(S, c)
        record["strongly_indispensable"] = report.verdict
        record["witnesses"] = report.to_json()["witnesses"]
    return record


def scan_generator_range(max_gen: int, dims=(2, 3, 4), class_filter: str | None = None):
    for dim in dims:
        for t in minimal_coprime_tuples(max_gen, dim):
            c = classify_with_permutations(t)
            if class_filter and c.tag.value != class_filter:
                continue
            yield record_for(c)


def _scan_parameter_box(builder, ranges, class_filter):
    seen = set()
    for params in product(*(range(lo, hi + 1) for lo, hi in ranges)):
        try:
            S = builder(params)
        except InvalidParameters:
            continue
        key = tuple(sorted(S.generators))
        if key in seen:
            continue
        seen.add(key)
        c = classify(S)
        if class_filter and c.tag.value != class_filter:
            continue
        yield record_for(c)


def scan_komeda(ranges, class_filter: str | None = None):
    """Scan over (alpha1, alpha2, alpha3, alpha4, alpha21) boxes."""
    if len(ranges) != 5:
        raise InvalidParameters("komeda scan needs 5 ranges")
    return _scan_parameter_box(lambda p: from_komeda(*p), ranges, class_filter)


def scan_bresinsky(ranges, class_filter: str | None = None):
    """Scan over (a21, a31, a32, a42, a13, a43, a14, a24) boxes."""
    if len(ranges) != 8:
        raise InvalidParameters("bresinsky scan needs 8 ranges")
    return _scan_parameter_box(from_bresinsky, ranges, class_filter)
