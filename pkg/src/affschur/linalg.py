"""
Exact sparse rational linear algebra.

Systems are kept sparse as dict-of-dict rows over arbitrary hashable row
and column labels.  Elimination is division-free: rows are combined by
integer cross-multiplication (after clearing denominators) and kept small
by dividing out the row content.  Pivots are chosen by a Markowitz-style
sparsity count.  Everything is exact; verdicts distinguish a unique
solution from inconsistent and underdetermined systems.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
import heapq
from math import gcd
from typing import Hashable, Sequence

__all__ = ["SparseSystem", "SolveResult", "solve_unique", "solve_many", "rank"]


@dataclass
class SparseSystem:
    """A labelled exact linear system  M x = rhs."""

    cols: list[Hashable]
    rows: list[Hashable]
    entries: dict[tuple[Hashable, Hashable], Fraction]
    rhs: dict[Hashable, Fraction] = field(default_factory=dict)


@dataclass
class SolveResult:
    """Outcome of an exact solve: unique / inconsistent / underdetermined."""

    status: str
    solution: dict[Hashable, Fraction] | None = None

    UNIQUE = "unique"
    INCONSISTENT = "inconsistent"
    UNDERDETERMINED = "underdetermined"


def _scaled_integer_rows(
    cols: Sequence[Hashable],
    rows: Sequence[Hashable],
    entries: dict[tuple[Hashable, Hashable], Fraction],
    rhs_list: Sequence[dict[Hashable, Fraction]],
) -> tuple[list[dict[int, int]], list[Fraction]]:
    """Clear denominators row-wise; rhs columns get indices -1, -2, ...

    Returns the integer rows plus one overall scale per rhs column (the
    rhs columns are pre-multiplied by these, so solutions must be divided
    by them afterwards).
    """
    col_index = {label: idx for idx, label in enumerate(cols)}
    # Common denominator per rhs column keeps the row scaling uniform.
    rhs_scales = []
    for k, rhs in enumerate(rhs_list):
        denom = 1
        for value in rhs.values():
            denom = denom * value.denominator // gcd(denom, value.denominator)
        rhs_scales.append(Fraction(denom))
    sparse: dict[Hashable, dict[int, Fraction]] = {label: {} for label in rows}
    for (row_label, col_label), value in entries.items():
        if value:
            sparse[row_label][col_index[col_label]] = value
    int_rows: list[dict[int, int]] = []
    for row_label in rows:
        raw = sparse[row_label]
        for k, rhs in enumerate(rhs_list):
            value = rhs.get(row_label)
            if value:
                raw[-1 - k] = value * rhs_scales[k]
        denom = 1
        for value in raw.values():
            denom = denom * value.denominator // gcd(denom, value.denominator)
        int_rows.append({c: int(v * denom) for c, v in raw.items()})
    return int_rows, rhs_scales


def _reduce_content(row: dict[int, int]) -> None:
    content = 0
    for value in row.values():
        content = gcd(content, value)
        if content == 1:
            return
    if content > 1:
        for key in row:
            row[key] //= content


def _coef_nnz(row: dict[int, int]) -> int:
    return sum(1 for c in row if c >= 0)


def _eliminate(
    int_rows: list[dict[int, int]],
) -> tuple[list[tuple[int, dict[int, int]]], list[dict[int, int]]]:
    """Forward elimination; returns (pivot column, pivot row) pairs and the
    leftover rows (whose coefficient parts are all zero).

    Pivots take the sparsest available row (lazy heap, stale entries
    skipped) and its smallest coefficient; a column index limits each
    step to the rows actually meeting the pivot column.
    """
    rows: dict[int, dict[int, int]] = {}
    colmap: dict[int, set[int]] = {}
    nnz_of: dict[int, int] = {}
    heap: list[tuple[int, int]] = []
    for rid, row in enumerate(r for r in int_rows if r):
        row = dict(row)
        rows[rid] = row
        count = 0
        for c in row:
            if c >= 0:
                colmap.setdefault(c, set()).add(rid)
                count += 1
        nnz_of[rid] = count
        if count:
            heap.append((count, rid))
    heapq.heapify(heap)
    pivots: list[tuple[int, dict[int, int]]] = []
    while heap:
        count, rid = heapq.heappop(heap)
        if rid not in rows or nnz_of[rid] != count:
            continue
        pivot_row = rows.pop(rid)
        for c in pivot_row:
            if c >= 0:
                colmap[c].discard(rid)
        col = min(
            (c for c in pivot_row if c >= 0),
            key=lambda c: (abs(pivot_row[c]), c),
        )
        pivot_val = pivot_row[col]
        pivots.append((col, pivot_row))
        for other in list(colmap.get(col, ())):
            row = rows[other]
            factor = row[col]
            merged: dict[int, int] = {}
            for c in row.keys() | pivot_row.keys():
                value = pivot_val * row.get(c, 0) - factor * pivot_row.get(c, 0)
                if value:
                    merged[c] = value
            _reduce_content(merged)
            for c in row:
                if c >= 0:
                    colmap[c].discard(other)
            if merged:
                rows[other] = merged
                count = 0
                for c in merged:
                    if c >= 0:
                        colmap.setdefault(c, set()).add(other)
                        count += 1
                nnz_of[other] = count
                if count:
                    heapq.heappush(heap, (count, other))
            else:
                del rows[other]
                nnz_of[other] = 0
    return pivots, list(rows.values())


def _back_substitute(
    pivots: list[tuple[int, dict[int, int]]], rhs_key: int
) -> dict[int, Fraction]:
    solution: dict[int, Fraction] = {}
    for col, row in reversed(pivots):
        total = Fraction(row.get(rhs_key, 0))
        for c, value in row.items():
            if c >= 0 and c != col:
                total -= value * solution.get(c, Fraction(0))
        solution[col] = total / row[col]
    return solution


def solve_many(
    cols: Sequence[Hashable],
    rows: Sequence[Hashable],
    entries: dict[tuple[Hashable, Hashable], Fraction],
    rhs_list: Sequence[dict[Hashable, Fraction]],
) -> list[SolveResult]:
    """Solve one coefficient matrix against many right-hand sides.

    The elimination is shared; each rhs gets its own verdict.
    """
    int_rows, rhs_scales = _scaled_integer_rows(cols, rows, entries, rhs_list)
    pivots, leftovers = _eliminate(int_rows)
    underdetermined = len(pivots) < len(cols)
    results = []
    for k in range(len(rhs_list)):
        rhs_key = -1 - k
        if any(row.get(rhs_key) for row in leftovers):
            results.append(SolveResult(SolveResult.INCONSISTENT))
            continue
        if underdetermined:
            results.append(SolveResult(SolveResult.UNDERDETERMINED))
            continue
        indexed = _back_substitute(pivots, rhs_key)
        scale = rhs_scales[k]
        solution = {
            cols[idx]: indexed.get(idx, Fraction(0)) / scale
            for idx in range(len(cols))
        }
        results.append(SolveResult(SolveResult.UNIQUE, solution))
    return results


def solve_unique(system: SparseSystem) -> SolveResult:
    """Solve for the unique solution of the system, if there is one."""
    return solve_many(
        system.cols, system.rows, system.entries, [system.rhs]
    )[0]


def rank(system: SparseSystem) -> int:
    """Exact rank of the coefficient matrix (rhs ignored)."""
    int_rows, _ = _scaled_integer_rows(
        system.cols, system.rows, system.entries, []
    )
    pivots, _ = _eliminate(int_rows)
    return len(pivots)
