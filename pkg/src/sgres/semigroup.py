"""Numerical semigroup arithmetic over exact integers.

A numerical semigroup is the set of nonnegative integer combinations of a
tuple of positive generators with gcd 1.  The generator order given by the
caller is preserved exactly: parameter extraction elsewhere assigns roles by
index, so ``(7, 9, 8, 13)`` and ``(7, 8, 9, 13)`` are different objects even
though they span the same set.

Membership is answered through the Apery set of the smallest generator,
built once at construction: ``n`` lies in the semigroup iff ``n`` is at
least the smallest element in its residue class.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

from .errors import (
    GcdNotOne,
    NonMinimalGenerator,
    NotInSemigroup,
    ZeroOrNegativeGenerator,
)

DEFAULT_REPRESENTATION_LIMIT = 10**6


class SymmetryType(Enum):
    SYMMETRIC = "Symmetric"
    PSEUDOSYMMETRIC = "Pseudosymmetric"
    NEITHER = "Neither"


@dataclass(frozen=True)
class Representation:
    """Coefficients ``u`` with ``sum(u[i] * n[i])`` equal to ``value``."""

    coefficients: tuple[int, ...]
    value: int


def _dijkstra_apery(gens: tuple[int, ...], m: int) -> tuple[int, ...]:
    # Least element per residue class mod m; edges r -> (r + g) % m, weight g.
    dist: list[int | None] = [None] * m
    dist[0] = 0
    heap = [(0, 0)]
    while heap:
        d, r = heapq.heappop(heap)
        if d != dist[r]:
            continue
        for g in gens:
            nd = d + g
            nr = (r + g) % m
            if dist[nr] is None or nd < dist[nr]:
                dist[nr] = nd
                heapq.heappush(heap, (nd, nr))
    return tuple(dist)  # type: ignore[arg-type]


@lru_cache(maxsize=4096)
def _apery_table(gens: tuple[int, ...]) -> tuple[int, ...]:
    # gens sorted ascending, gcd 1; table indexed by residue mod gens[0].
    return _dijkstra_apery(gens, gens[0])


def is_representable(value: int, gens: tuple[int, ...]) -> bool:
    """Whether ``value`` is a nonnegative integer combination of ``gens``.

    ``gens`` may have gcd greater than 1; the query is reduced to the
    numerical semigroup spanned by ``gens / gcd``.
    """
    if value < 0:
        return False
    if value == 0:
        return True
    g = math.gcd(*gens)
    if value % g:
        return False
    reduced = tuple(sorted({x // g for x in gens}))
    table = _apery_table(reduced)
    v = value // g
    return v >= table[v % reduced[0]]


def representations_of(
    value: int,
    gens: tuple[int, ...],
    limit: int = DEFAULT_REPRESENTATION_LIMIT,
) -> tuple[list[tuple[int, ...]], bool]:
    """All nonnegative coefficient tuples for ``value`` over ``gens``.

    Enumerated depth-first in lexicographic order.  Returns
    ``(tuples, truncated)``; ``truncated`` is True when ``limit`` was hit.
    """
    if value < 0:
        return [], False
    k = len(gens)
    out: list[tuple[int, ...]] = []
    coeffs = [0] * k
    truncated = False

    def walk(i: int, remaining: int) -> None:
        nonlocal truncated
        if truncated:
            return
        if i == k - 1:
            q, r = divmod(remaining, gens[i])
            if r == 0:
                if len(out) >= limit:
                    truncated = True
                    return
                coeffs[i] = q
                out.append(tuple(coeffs))
                coeffs[i] = 0
            return
        g = gens[i]
        for u in range(remaining // g + 1):
            coeffs[i] = u
            walk(i + 1, remaining - u * g)
            if truncated:
                break
        coeffs[i] = 0

    walk(0, value)
    return out, truncated


class NumericalSemigroup:
    """Validated numerical semigroup with an order-preserved generator tuple."""

    __slots__ = ("_generators", "_apery_min", "_pf", "_symmetry")

    def __init__(self, generators):
        gens = tuple(generators)
        if not gens:
            raise ZeroOrNegativeGenerator("generator tuple is empty")
        for i, n in enumerate(gens):
            if not isinstance(n, int) or isinstance(n, bool):
                raise ZeroOrNegativeGenerator(
                    f"generator {n!r} at index {i} is not an integer"
                )
            if n <= 0:
                raise ZeroOrNegativeGenerator(
                    f"generator {n} at index {i} is not positive"
                )
        if math.gcd(*gens) != 1:
            raise GcdNotOne(f"gcd of {gens} is {math.gcd(*gens)}, expected 1")
        for i, n in enumerate(gens):
            others = gens[:i] + gens[i + 1 :]
            if others and is_representable(n, others):
                raise NonMinimalGenerator(
                    i,
                    f"generator {n} at index {i} is a combination of the others",
                )
        self._generators = gens
        self._apery_min = _apery_table(tuple(sorted(gens)))
        self._pf: list[int] | None = None
        self._symmetry: SymmetryType | None = None

    @property
    def generators(self) -> tuple[int, ...]:
        return self._generators

    @property
    def embedding_dimension(self) -> int:
        return len(self._generators)

    @property
    def multiplicity(self) -> int:
        return min(self._generators)

    @property
    def generator_sum(self) -> int:
        return sum(self._generators)

    def contains(self, n: int) -> bool:
        if n < 0:
            return False
        return n >= self._apery_min[n % self.multiplicity]

    def __contains__(self, n: int) -> bool:
        return self.contains(n)

    def apery(self, m: int | None = None) -> tuple[int, ...]:
        """Least elements per residue class mod ``m``, indexed by residue.

        ``m`` must be a positive element of the semigroup; defaults to the
        multiplicity.
        """
        if m is None:
            return self._apery_min
        if m <= 0 or not self.contains(m):
            raise NotInSemigroup(f"{m} is not a positive element of {self!r}")
        if m == self.multiplicity:
            return self._apery_min
        return _dijkstra_apery(self._generators, m)

    def frobenius(self) -> int:
        """Largest integer outside the semigroup (-1 for the full set N)."""
        return max(self._apery_min) - self.multiplicity

    def gaps(self) -> list[int]:
        return [n for n in range(1, self.frobenius() + 1) if not self.contains(n)]

    def pseudofrobenius(self) -> list[int]:
        """Integers n outside S with n + s inside S for every nonzero s.

        Computed straight from the definition by scanning the gaps; this is
        the oracle that Betti-degree formulas are checked against.  For the
        degenerate semigroup generated by 1 the answer is [-1].
        """
        if self._pf is None:
            if self.frobenius() < 0:
                pf = [-1]
            else:
                gens = self._generators
                pf = [
                    n
                    for n in self.gaps()
                    if all(self.contains(n + g) for g in gens)
                ]
            self._pf = pf
        return list(self._pf)

    def symmetry_type(self) -> SymmetryType:
        if self._symmetry is None:
            pf = self.pseudofrobenius()
            g = self.frobenius()
            if pf == [g]:
                t = SymmetryType.SYMMETRIC
            elif g % 2 == 0 and pf == [g // 2, g]:
                t = SymmetryType.PSEUDOSYMMETRIC
            else:
                t = SymmetryType.NEITHER
            self._symmetry = t
        return self._symmetry

    def representations(
        self, value: int, limit: int = DEFAULT_REPRESENTATION_LIMIT
    ) -> tuple[list[Representation], bool]:
        """All representations of ``value``, with a truncation flag."""
        raw, truncated = representations_of(value, self._generators, limit)
        return [Representation(c, value) for c in raw], truncated

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, NumericalSemigroup)
            and self._generators == other._generators
        )

    def __hash__(self) -> int:
        return hash(self._generators)

    def __repr__(self) -> str:
        return f"NumericalSemigroup({', '.join(map(str, self._generators))})"
