"""
Product engines for the q=1 affine Schur algebra.

Two independent routes are implemented:

* ``multiply_oracle`` counts middle tuples in the orbit model directly.
  It is the source of truth; everything else is validated against it.

* closed-form routes: ``chevalley_left``/``chevalley_right`` (row/column
  shift generators), ``loop_left`` (loop generators) and
  ``doublecoset_product`` (stabilizer double cosets with index
  multiplicities).  These are fast paths whose outputs must agree with
  the oracle exactly.

Basis products are memoized in a fill-once structure table keyed by
canonical matrix pairs; concurrent duplicate fills are harmless because
every fill computes the identical value.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

from .core import AlgebraElement, PeriodicMatrix, compositions, diag_matrix
from .weyl import (
    IndexTuple,
    WeylElement,
    act,
    matrix_to_pair,
    pair_orbit_equal,
    pair_to_matrix,
    stabilizer,
    transporter,
)

__all__ = [
    "multiply_oracle",
    "multiply",
    "identity_element",
    "chevalley_left",
    "chevalley_right",
    "loop_left",
    "doublecoset_product",
    "StructureTable",
    "structure_table",
    "InfiniteComposition",
]


@dataclass(frozen=True)
class InfiniteComposition:
    """Finitely supported assignment Z -> N with a fixed total."""

    support: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        if any(t < 0 for _, t in self.support):
            raise ValueError("parts must be nonnegative")

    @property
    def total(self) -> int:
        return sum(t for _, t in self.support)

    def part(self, u: int) -> int:
        for pos, t in self.support:
            if pos == u:
                return t
        return 0

    @classmethod
    def bounded(
        cls, caps: dict[int, int], total: int
    ) -> Iterator["InfiniteComposition"]:
        """All assignments t with sum total and t_u <= caps[u]."""
        positions = sorted(caps)

        def rec(idx: int, remaining: int, acc: list[tuple[int, int]]):
            if idx == len(positions):
                if remaining == 0:
                    yield cls(tuple(acc))
                return
            u = positions[idx]
            for t in range(min(remaining, caps[u]) + 1):
                if t:
                    acc.append((u, t))
                    yield from rec(idx + 1, remaining - t, acc)
                    acc.pop()
                else:
                    yield from rec(idx + 1, remaining, acc)

        yield from rec(0, total, [])


def multiply_oracle(
    pair1: tuple[Sequence[int], Sequence[int]],
    pair2: tuple[Sequence[int], Sequence[int]],
    n: int,
) -> AlgebraElement:
    """Orbit-counting product of two basis elements given as tuple pairs.

    The result is the sum over result orbits of the number of middle
    tuples joining the factors, returned as an algebra element.
    """
    (i, j), (k, l) = (tuple(pair1[0]), tuple(pair1[1])), (
        tuple(pair2[0]),
        tuple(pair2[1]),
    )
    r = len(i)
    if not (len(j) == len(k) == len(l) == r):
        raise ValueError("all tuples must share one length")
    zero = AlgebraElement.zero(n, r)

    # Align the middle: rewrite the second factor on representative (j, .).
    bridges = transporter(k, j, n)
    if not bridges:
        return zero
    l_aligned = act(l, bridges[0], n)

    # Candidate middle tuples and result orbits, first component fixed at i.
    middles = sorted({act(j, w, n) for w in stabilizer(i, n)})
    orbit_reps: dict[PeriodicMatrix, IndexTuple] = {}
    for s in middles:
        for w in transporter(j, s, n):
            q = act(l_aligned, w, n)
            matrix = pair_to_matrix(i, q, n)
            orbit_reps.setdefault(matrix, q)

    terms: dict[PeriodicMatrix, Fraction] = {}
    for matrix, q in orbit_reps.items():
        count = sum(
            1
            for s in middles
            if pair_orbit_equal((s, q), (j, l_aligned), n)
        )
        if count:
            terms[matrix] = Fraction(count)
    return AlgebraElement(n, r, terms)


class StructureTable:
    """Fill-once cache of basis products keyed by canonical matrix pairs."""

    def __init__(self) -> None:
        self._cache: dict[
            tuple[PeriodicMatrix, PeriodicMatrix], AlgebraElement
        ] = {}

    def __len__(self) -> int:
        return len(self._cache)

    def product(
        self, a: PeriodicMatrix, b: PeriodicMatrix
    ) -> AlgebraElement:
        if a.n != b.n or a.r != b.r:
            raise ValueError("matrices index different algebras")
        if a.col_vector() != b.row_vector():
            return AlgebraElement.zero(a.n, a.r)
        key = (a, b)
        cached = self._cache.get(key)
        if cached is None:
            cached = multiply_oracle(
                matrix_to_pair(a), matrix_to_pair(b), a.n
            )
            self._cache[key] = cached
        return cached

    def recompute(
        self, a: PeriodicMatrix, b: PeriodicMatrix
    ) -> AlgebraElement:
        """Fresh oracle product, bypassing the cache."""
        if a.col_vector() != b.row_vector():
            return AlgebraElement.zero(a.n, a.r)
        return multiply_oracle(matrix_to_pair(a), matrix_to_pair(b), a.n)


structure_table = StructureTable()


def multiply(x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    """Bilinear extension of the basis product."""
    if x.n != y.n or x.r != y.r:
        raise ValueError("elements live in different algebras")
    acc: dict[PeriodicMatrix, Fraction] = {}
    for a, ca in x.terms.items():
        for b, cb in y.terms.items():
            product = structure_table.product(a, b)
            if product.is_zero():
                continue
            scale = ca * cb
            for matrix, coeff in product.terms.items():
                acc[matrix] = acc.get(matrix, Fraction(0)) + scale * coeff
    return AlgebraElement(x.n, x.r, acc)


def identity_element(n: int, r: int) -> AlgebraElement:
    """Sum of the diagonal idempotents, the unity of the algebra."""
    if n < 1 or r < 0:
        raise ValueError("need n >= 1 and r >= 0")
    return AlgebraElement(
        n,
        r,
        {diag_matrix(comp): Fraction(1) for comp in compositions(n, r)},
    )


def _binom(top: int, bottom: int) -> int:
    return math.comb(top, bottom)


def chevalley_left(
    h: int, m: int, sign: str, a: PeriodicMatrix
) -> AlgebraElement:
    """Left multiplication by the m-fold row-shift generator at slot h.

    ``sign="up"`` moves m units from row h+1 up to row h (the generator
    diag(row A) + m E_{h,h+1} - m E_{h+1,h+1}); ``sign="down"`` moves
    them from row h down to row h+1.  The result is the exact binomial
    sum over bounded transfer patterns.
    """
    n = a.n
    if not 1 <= h <= n:
        raise ValueError("slot must lie in 1..n")
    if m < 0:
        raise ValueError("transfer amount must be nonnegative")
    if sign not in ("up", "down"):
        raise ValueError("sign must be 'up' or 'down'")
    terms: dict[PeriodicMatrix, Fraction] = {}
    if sign == "up":
        source = a.row_entries(h + 1)
        for t in InfiniteComposition.bounded(source, m):
            coeff = 1
            deltas = []
            for u, tu in t.support:
                coeff *= _binom(a.entry(h, u) + tu, tu)
                deltas.append((h, u, tu))
                deltas.append((h + 1, u, -tu))
            matrix = a.shifted_by(deltas)
            terms[matrix] = terms.get(matrix, Fraction(0)) + coeff
    else:
        source = a.row_entries(h)
        for t in InfiniteComposition.bounded(source, m):
            coeff = 1
            deltas = []
            for u, tu in t.support:
                coeff *= _binom(a.entry(h + 1, u) + tu, tu)
                deltas.append((h, u, -tu))
                deltas.append((h + 1, u, tu))
            matrix = a.shifted_by(deltas)
            terms[matrix] = terms.get(matrix, Fraction(0)) + coeff
    return AlgebraElement(n, a.r, terms)


def chevalley_right(
    h: int, m: int, sign: str, a: PeriodicMatrix
) -> AlgebraElement:
    """Right multiplication by the m-fold column-shift generator at slot h.

    ``sign="up"`` moves m units from column h to column h+1;
    ``sign="down"`` moves them from column h+1 back to column h.
    """
    n = a.n
    if not 1 <= h <= n:
        raise ValueError("slot must lie in 1..n")
    if m < 0:
        raise ValueError("transfer amount must be nonnegative")
    if sign not in ("up", "down"):
        raise ValueError("sign must be 'up' or 'down'")
    terms: dict[PeriodicMatrix, Fraction] = {}
    if sign == "up":
        source = a.col_entries(h)
        for t in InfiniteComposition.bounded(source, m):
            coeff = 1
            deltas = []
            for u, tu in t.support:
                coeff *= _binom(a.entry(u, h + 1) + tu, tu)
                deltas.append((u, h + 1, tu))
                deltas.append((u, h, -tu))
            matrix = a.shifted_by(deltas)
            terms[matrix] = terms.get(matrix, Fraction(0)) + coeff
    else:
        source = a.col_entries(h + 1)
        for t in InfiniteComposition.bounded(source, m):
            coeff = 1
            deltas = []
            for u, tu in t.support:
                coeff *= _binom(a.entry(u, h) + tu, tu)
                deltas.append((u, h + 1, -tu))
                deltas.append((u, h, tu))
            matrix = a.shifted_by(deltas)
            terms[matrix] = terms.get(matrix, Fraction(0)) + coeff
    return AlgebraElement(n, a.r, terms)


def loop_left(h: int, m: int, a: PeriodicMatrix) -> AlgebraElement:
    """Left multiplication by the loop generator moving row-h mass by m*n.

    The generator is diag(row A) - E_{h,h} + E_{h,h+m*n} with m nonzero;
    each occupied slot u of row h contributes one term shifted to u+m*n
    with multiplicity a_{h,u+m*n} + 1.
    """
    n = a.n
    if not 1 <= h <= n:
        raise ValueError("slot must lie in 1..n")
    if m == 0:
        raise ValueError("loop amount must be nonzero")
    terms: dict[PeriodicMatrix, Fraction] = {}
    for u, value in a.row_entries(h).items():
        if value < 1:
            continue
        coeff = a.entry(h, u + m * n) + 1
        matrix = a.shifted_by([(h, u + m * n, 1), (h, u, -1)])
        terms[matrix] = terms.get(matrix, Fraction(0)) + coeff
    return AlgebraElement(n, a.r, terms)


def _double_cosets(
    group: list[WeylElement],
    left: list[WeylElement],
    right: list[WeylElement],
) -> list[WeylElement]:
    """Representatives of left\\group/right for finite subgroups."""
    remaining = set(group)
    reps = []
    for delta in group:
        if delta not in remaining:
            continue
        reps.append(delta)
        for a in left:
            ad = a * delta
            for b in right:
                remaining.discard(ad * b)
    return reps


def doublecoset_product(
    pair1: tuple[Sequence[int], Sequence[int]],
    pair2: tuple[Sequence[int], Sequence[int]],
    n: int,
) -> AlgebraElement:
    """Basis product via stabilizer double cosets.

    After aligning the factors on a shared middle tuple j, the product is
    the sum over double cosets of the middle stabilizer of the basis
    element at (i, l.delta), with multiplicity the index of the triple
    stabilizer inside the stabilizer of (i, l.delta).
    """
    (i, j) = (tuple(pair1[0]), tuple(pair1[1]))
    (k, l) = (tuple(pair2[0]), tuple(pair2[1]))
    r = len(i)
    if not (len(j) == len(k) == len(l) == r):
        raise ValueError("all tuples must share one length")
    zero = AlgebraElement.zero(n, r)

    bridges = transporter(k, j, n)
    if not bridges:
        return zero
    l = act(l, bridges[0], n)

    middle_stab = stabilizer(j, n)
    stab_jl = [w for w in middle_stab if act(l, w, n) == l]
    stab_i = stabilizer(i, n)
    stab_ij = [w for w in middle_stab if act(i, w, n) == i]

    terms: dict[PeriodicMatrix, Fraction] = {}
    for delta in _double_cosets(middle_stab, stab_jl, stab_ij):
        target = act(l, delta, n)
        pair_stab = [w for w in stab_i if act(target, w, n) == target]
        triple_stab = [w for w in pair_stab if act(j, w, n) == j]
        index, remainder = divmod(len(pair_stab), len(triple_stab))
        if remainder:
            raise ArithmeticError("subgroup index is not integral")
        matrix = pair_to_matrix(i, target, n)
        terms[matrix] = terms.get(matrix, Fraction(0)) + index
    return AlgebraElement(n, r, terms)
