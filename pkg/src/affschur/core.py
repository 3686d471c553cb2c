"""
Canonical data types for the q=1 affine Schur algebra.

Conventions used throughout the package:

* A periodic matrix is a Z x Z matrix A = (a_{i,j}) of nonnegative integers
  with a_{i,j} = a_{i+n,j+n} and finitely many nonzero entries in each row.
  We store one period: every stored entry has row index in 1..n, while the
  column index ranges over all of Z.  Any input entry (i, j) with i outside
  1..n is shifted by a multiple of n on both indices, so equality of
  matrices is plain equality of the stored entry sets.

* The weight r of a matrix is the total of its stored entries; the row and
  column sums (reduced mod n into 1..n) are compositions of r with n parts.

* Algebra elements are finite linear combinations of basis matrices with
  exact rational coefficients.  All arithmetic in this package is exact;
  no floating point is used anywhere.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Mapping

__all__ = [
    "Composition",
    "PeriodicMatrix",
    "AlgebraElement",
    "compositions",
    "diag_matrix",
    "unit_matrix",
    "row_vector",
    "col_vector",
    "grade",
    "transpose",
    "element_to_json",
    "element_from_json",
]


Scalar = int | Fraction

_FRACTION_RE = re.compile(r"^-?\d+(/[1-9]\d*)?$")


def parse_fraction(text: str) -> Fraction:
    """Parse an exact fraction string like ``"3/2"`` or ``"-4"``.

    Decimal notation is rejected: coefficients must stay exact.
    """
    if not isinstance(text, str) or not _FRACTION_RE.match(text):
        raise ValueError(f"not an exact fraction string: {text!r}")
    return Fraction(text)


def format_fraction(value: Fraction) -> str:
    return str(value)


@dataclass(frozen=True)
class Composition:
    """One period of an n-periodic sequence of nonnegative integers."""

    n: int
    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("period must be positive")
        if len(self.parts) != self.n:
            raise ValueError("composition must list exactly one period")
        if any(p < 0 for p in self.parts):
            raise ValueError("composition parts must be nonnegative")

    @property
    def r(self) -> int:
        return sum(self.parts)

    def part(self, i: int) -> int:
        """The i-th part for any integer i, via periodicity."""
        return self.parts[(i - 1) % self.n]

    def __repr__(self) -> str:
        return f"Composition(n={self.n}, {self.parts})"


def compositions(n: int, r: int) -> Iterator[Composition]:
    """All compositions of r into n nonnegative parts, lexicographically."""
    if n < 1:
        raise ValueError("period must be positive")

    def rec(prefix: tuple[int, ...], remaining: int, slots: int):
        if slots == 1:
            yield Composition(n, prefix + (remaining,))
            return
        for head in range(remaining + 1):
            yield from rec(prefix + (head,), remaining - head, slots - 1)

    yield from rec((), r, n)


def _normalize_row(n: int, i: int, j: int) -> tuple[int, int]:
    """Shift (i, j) by a multiple of n so the row index lands in 1..n."""
    s = (i - 1) // n
    return i - s * n, j - s * n


@dataclass(frozen=True)
class PeriodicMatrix:
    """Canonical representative of an n-periodic nonnegative matrix.

    ``entries`` is a sorted tuple of (row, column, value) triples with row
    in 1..n, column in Z and value >= 1.
    """

    n: int
    entries: tuple[tuple[int, int, int], ...]
    _lookup: dict[tuple[int, int], int] = field(
        init=False, repr=False, compare=False, hash=False, default_factory=dict
    )

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("period must be positive")
        lookup: dict[tuple[int, int], int] = {}
        for i, j, a in self.entries:
            if not 1 <= i <= self.n:
                raise ValueError("stored rows must lie in 1..n")
            if a < 1:
                raise ValueError("stored entries must be positive")
            if (i, j) in lookup:
                raise ValueError("duplicate entry position")
            lookup[(i, j)] = a
        object.__setattr__(self, "_lookup", lookup)

    @classmethod
    def from_entries(
        cls, n: int, entries: Iterable[tuple[int, int, int]]
    ) -> "PeriodicMatrix":
        """Build a matrix from arbitrary (row, column, value) triples.

        Rows are shifted into 1..n, coinciding positions are merged and
        zero values dropped, so the result is canonical.

        >>> PeriodicMatrix.from_entries(2, [(3, 2, 1), (1, 0, 1)])
        Mat(n=2;(1,0):2)
        """
        acc: dict[tuple[int, int], int] = {}
        for i, j, a in entries:
            if a < 0:
                raise ValueError("matrix entries must be nonnegative")
            if a == 0:
                continue
            key = _normalize_row(n, i, j)
            acc[key] = acc.get(key, 0) + a
        canon = tuple(sorted((i, j, a) for (i, j), a in acc.items()))
        return cls(n, canon)

    @property
    def r(self) -> int:
        return sum(a for _, _, a in self.entries)

    def entry(self, i: int, j: int) -> int:
        """The matrix entry a_{i,j} for arbitrary integers i, j."""
        return self._lookup.get(_normalize_row(self.n, i, j), 0)

    def row_entries(self, i: int) -> dict[int, int]:
        """Nonzero entries {j: a_{i,j}} of row i, for any integer i."""
        s = (i - 1) // self.n
        base = i - s * self.n
        return {
            j + s * self.n: a for (k, j, a) in self.entries if k == base
        }

    def col_entries(self, j: int) -> dict[int, int]:
        """Nonzero entries {i: a_{i,j}} of column j, for any integer j."""
        out: dict[int, int] = {}
        for i, jj, a in self.entries:
            # (i, jj) represents the positions (i + sn, jj + sn); exactly
            # one of them sits in column j when jj = j (mod n).
            if (jj - j) % self.n == 0:
                s = (j - jj) // self.n
                out[i + s * self.n] = a
        return out

    def row_vector(self) -> Composition:
        parts = [0] * self.n
        for i, _, a in self.entries:
            parts[i - 1] += a
        return Composition(self.n, tuple(parts))

    def col_vector(self) -> Composition:
        parts = [0] * self.n
        for _, j, a in self.entries:
            parts[(j - 1) % self.n] += a
        return Composition(self.n, tuple(parts))

    def transpose(self) -> "PeriodicMatrix":
        return PeriodicMatrix.from_entries(
            self.n, ((j, i, a) for i, j, a in self.entries)
        )

    def shifted_by(
        self, deltas: Iterable[tuple[int, int, int]]
    ) -> "PeriodicMatrix":
        """The matrix A + sum of delta*E_{i,j} unit shifts.

        Raises if any resulting entry would be negative.
        """
        acc: dict[tuple[int, int], int] = dict(self._lookup)
        for i, j, d in deltas:
            key = _normalize_row(self.n, i, j)
            acc[key] = acc.get(key, 0) + d
        for value in acc.values():
            if value < 0:
                raise ValueError("matrix entry driven negative")
        canon = tuple(
            sorted((i, j, a) for (i, j), a in acc.items() if a != 0)
        )
        return PeriodicMatrix(self.n, canon)

    def is_upper_triangular(self) -> bool:
        return all(i <= j for i, j, _ in self.entries)

    def is_lower_triangular(self) -> bool:
        return all(i >= j for i, j, _ in self.entries)

    def sort_key(self) -> tuple:
        return self.entries

    def __repr__(self) -> str:
        body = ",".join(f"({i},{j}):{a}" for i, j, a in self.entries)
        return f"Mat(n={self.n};{body})"


def diag_matrix(comp: Composition) -> PeriodicMatrix:
    """The diagonal matrix with the given composition on the diagonal."""
    return PeriodicMatrix.from_entries(
        comp.n, ((i + 1, i + 1, p) for i, p in enumerate(comp.parts))
    )


def unit_matrix(n: int, i: int, j: int) -> PeriodicMatrix:
    """The weight-one matrix supported on the periodic orbit of (i, j).

    >>> unit_matrix(2, 1, -1) == PeriodicMatrix.from_entries(2, [(3, 1, 1)])
    True
    """
    if not 1 <= i <= n:
        raise ValueError("row index must lie in 1..n")
    return PeriodicMatrix.from_entries(n, [(i, j, 1)])


def row_vector(matrix: PeriodicMatrix) -> Composition:
    return matrix.row_vector()


def col_vector(matrix: PeriodicMatrix) -> Composition:
    return matrix.col_vector()


def grade(matrix: PeriodicMatrix) -> int:
    """Degree of a triangular basis matrix.

    Upper-triangular matrices get sum a_{i,j} (j - i) over stored entries,
    lower-triangular ones the negated mirror sum; diagonal matrices get 0
    under both readings.  Mixed-triangular input is rejected since no
    single formula covers it.

    >>> grade(PeriodicMatrix.from_entries(2, [(1, 3, 2)]))
    4
    >>> grade(PeriodicMatrix.from_entries(2, [(3, 1, 2)]))
    -4
    """
    if matrix.is_upper_triangular():
        return sum(a * (j - i) for i, j, a in matrix.entries)
    if matrix.is_lower_triangular():
        return -sum(a * (i - j) for i, j, a in matrix.entries)
    raise ValueError("grade is defined only for triangular matrices")


class AlgebraElement:
    """Finite rational linear combination of basis matrices.

    Instances are treated as immutable: every arithmetic operation
    returns a fresh element, and zero coefficients are never stored.
    """

    __slots__ = ("n", "r", "terms")

    def __init__(
        self,
        n: int,
        r: int,
        terms: Mapping[PeriodicMatrix, Scalar] | None = None,
    ) -> None:
        if n < 1:
            raise ValueError("period must be positive")
        if r < 0:
            raise ValueError("weight must be nonnegative")
        self.n = n
        self.r = r
        clean: dict[PeriodicMatrix, Fraction] = {}
        for matrix, coeff in (terms or {}).items():
            value = Fraction(coeff)
            if value == 0:
                continue
            if matrix.n != n or matrix.r != r:
                raise ValueError("term matrix has mismatched parameters")
            clean[matrix] = value
        self.terms = clean

    @classmethod
    def zero(cls, n: int, r: int) -> "AlgebraElement":
        return cls(n, r, {})

    @classmethod
    def basis(
        cls, matrix: PeriodicMatrix, coeff: Scalar = 1
    ) -> "AlgebraElement":
        return cls(matrix.n, matrix.r, {matrix: Fraction(coeff)})

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, matrix: PeriodicMatrix) -> Fraction:
        return self.terms.get(matrix, Fraction(0))

    def sorted_terms(self) -> list[tuple[PeriodicMatrix, Fraction]]:
        return sorted(self.terms.items(), key=lambda kv: kv[0].sort_key())

    def _check_compatible(self, other: "AlgebraElement") -> None:
        if self.n != other.n or self.r != other.r:
            raise ValueError("elements live in different algebras")

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        self._check_compatible(other)
        acc = dict(self.terms)
        for matrix, coeff in other.terms.items():
            acc[matrix] = acc.get(matrix, Fraction(0)) + coeff
        return AlgebraElement(self.n, self.r, acc)

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self + (-other)

    def __neg__(self) -> "AlgebraElement":
        return self.scaled(-1)

    def scaled(self, coeff: Scalar) -> "AlgebraElement":
        value = Fraction(coeff)
        return AlgebraElement(
            self.n, self.r, {m: c * value for m, c in self.terms.items()}
        )

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            from .multiplication import multiply

            return multiply(self, other)
        if isinstance(other, (int, Fraction)):
            return self.scaled(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scaled(other)
        return NotImplemented

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return (
            self.n == other.n
            and self.r == other.r
            and self.terms == other.terms
        )

    __hash__ = None  # type: ignore[assignment]

    def transpose(self) -> "AlgebraElement":
        return AlgebraElement(
            self.n,
            self.r,
            {m.transpose(): c for m, c in self.terms.items()},
        )

    def supported_on(self, row: Composition | None, col: Composition | None) -> bool:
        """True when every term matches the given row/column weights."""
        for matrix in self.terms:
            if row is not None and matrix.row_vector() != row:
                return False
            if col is not None and matrix.col_vector() != col:
                return False
        return True

    def __repr__(self) -> str:
        if not self.terms:
            return f"0<S({self.n},{self.r})>"
        parts = [
            f"{c}*{m!r}" for m, c in self.sorted_terms()
        ]
        return " + ".join(parts)


def transpose(x: AlgebraElement) -> AlgebraElement:
    """The anti-involution flipping every basis matrix across the diagonal."""
    return x.transpose()


def element_to_json(x: AlgebraElement) -> dict:
    """Serialize an element in the shared JSON exchange format."""
    return {
        "n": x.n,
        "r": x.r,
        "terms": [
            {
                "coeff": format_fraction(coeff),
                "entries": [[i, j, a] for i, j, a in matrix.entries],
            }
            for matrix, coeff in x.sorted_terms()
        ],
    }


def element_from_json(data: dict) -> AlgebraElement:
    """Parse the JSON exchange format, normalizing sloppy input.

    Entries with rows outside 1..n are shifted into range, duplicate
    matrices have their coefficients merged, zero terms are dropped.
    """
    if not isinstance(data, dict):
        raise ValueError("element JSON must be an object")
    try:
        n = int(data["n"])
        r = int(data["r"])
        raw_terms = data["terms"]
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"malformed element JSON: {exc}") from None
    if not isinstance(raw_terms, list):
        raise ValueError("element terms must be a list")
    acc: dict[PeriodicMatrix, Fraction] = {}
    for item in raw_terms:
        if not isinstance(item, dict):
            raise ValueError("each term must be an object")
        coeff = parse_fraction(item.get("coeff", ""))
        entries = item.get("entries")
        if not isinstance(entries, list):
            raise ValueError("term entries must be a list")
        triples = []
        for triple in entries:
            if (
                not isinstance(triple, (list, tuple))
                or len(triple) != 3
                or not all(isinstance(v, int) for v in triple)
            ):
                raise ValueError("entries must be integer triples")
            triples.append((triple[0], triple[1], triple[2]))
        matrix = PeriodicMatrix.from_entries(n, triples)
        if matrix.r != r:
            raise ValueError("term weight disagrees with declared r")
        acc[matrix] = acc.get(matrix, Fraction(0)) + coeff
    return AlgebraElement(n, r, acc)
