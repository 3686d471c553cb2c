"""
Seeded random generators for elements, tensors and group data.

Everything takes an explicit ``random.Random`` so that verification runs
and tests are reproducible from a single seed.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .core import AlgebraElement, PeriodicMatrix
from .hecke import HeckeElement
from .laurent import LaurentPoly1, LaurentPoly2
from .weyl import WeylElement, pair_to_matrix

__all__ = [
    "random_weyl",
    "random_basis_matrix",
    "random_element",
    "random_hecke",
    "random_poly1",
    "random_poly2",
    "random_tensor_cells",
]


def _random_fraction(rng: random.Random) -> Fraction:
    value = Fraction(rng.randint(-4, 4), rng.randint(1, 3))
    return value if value else Fraction(1)


def random_weyl(rng: random.Random, r: int, shift: int = 2) -> WeylElement:
    sigma = list(range(1, r + 1))
    rng.shuffle(sigma)
    eps = tuple(rng.randint(-shift, shift) for _ in range(r))
    return WeylElement(tuple(sigma), eps)


def random_basis_matrix(
    rng: random.Random,
    n: int,
    r: int,
    col_lo: int = -4,
    col_hi: int = 5,
) -> PeriodicMatrix:
    rows = tuple(sorted(rng.randint(1, n) for _ in range(r)))
    cols = tuple(rng.randint(col_lo, col_hi) for _ in range(r))
    return pair_to_matrix(rows, cols, n)


def random_element(
    rng: random.Random,
    n: int,
    r: int,
    terms: int = 3,
    col_lo: int = -4,
    col_hi: int = 5,
) -> AlgebraElement:
    acc: dict[PeriodicMatrix, Fraction] = {}
    for _ in range(rng.randint(1, terms)):
        matrix = random_basis_matrix(rng, n, r, col_lo, col_hi)
        acc[matrix] = acc.get(matrix, Fraction(0)) + _random_fraction(rng)
    return AlgebraElement(n, r, acc)


def random_hecke(
    rng: random.Random, terms: int = 3, shift: int = 2
) -> HeckeElement:
    acc: dict[WeylElement, Fraction] = {}
    for _ in range(rng.randint(1, terms)):
        w = random_weyl(rng, 2, shift)
        acc[w] = acc.get(w, Fraction(0)) + _random_fraction(rng)
    return HeckeElement(acc)


def random_poly1(
    rng: random.Random, terms: int = 3, span: int = 3
) -> LaurentPoly1:
    return LaurentPoly1(
        {
            rng.randint(-span, span): _random_fraction(rng)
            for _ in range(rng.randint(1, terms))
        }
    )


def random_poly2(
    rng: random.Random, terms: int = 3, a_max: int = 2, b_span: int = 2
) -> LaurentPoly2:
    acc = {}
    for _ in range(rng.randint(1, terms)):
        key = (rng.randint(0, a_max), rng.randint(-b_span, b_span))
        acc[key] = _random_fraction(rng)
    return LaurentPoly2(acc)


def random_tensor_cells(
    rng: random.Random, cells: int = 3, a_max: int = 2, b_span: int = 2
) -> list[tuple[int, int, LaurentPoly2]]:
    """Sparse random tensor data as (row, column, polynomial) triples."""
    out = []
    for _ in range(rng.randint(1, cells)):
        out.append(
            (
                rng.randint(0, 3),
                rng.randint(0, 3),
                random_poly2(rng, 2, a_max, b_span),
            )
        )
    return out
