"""
The cellular structure of the n = r = 2 algebra.

Fixed data (all at n = r = 2):

* weights (2,0), (0,2), (1,1) and their diagonal idempotents;
* the corner algebra B cut out by the (2,0) idempotent, identified with
  Q[x1, x2, x2^-1] via  x1 <-> E_{1,1}+E_{1,3},  x2 <-> 2E_{1,3},
  x2^-1 <-> 2E_{3,1};
* the four-element bases of the row-(2,0) span as a left B-module and of
  the column-(2,0) span as a right B-module (the second is the entrywise
  transpose of the first);
* the two-sided ideal generated by the (2,0) idempotent, coordinatized
  by 4 x 4 tensors of Laurent polynomials.

Decompositions over the free bases follow the explicit recurrences for
the x1 action, so they are exact and terminate without linear algebra;
the linear solver is used where no recurrence exists (writing a corner
element as a polynomial, and finding tensor coordinates of ideal
members) and as an independent cross-check.

All membership and inversion problems are truncated by a *window*: a
bound W restricting the column support of every matrix involved to
[-W, W].  Windows grow geometrically up to a cap; a question that does
not fit the cap is answered "undecided" rather than guessed.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .core import AlgebraElement, Composition, PeriodicMatrix, diag_matrix
from .laurent import LaurentPoly2
from .linalg import SolveResult, solve_many
from .multiplication import multiply

__all__ = [
    "CellVector",
    "CellTensor",
    "MembershipResult",
    "UndecidedError",
    "NotInWindowError",
    "WEIGHT_20",
    "WEIGHT_02",
    "WEIGHT_11",
    "idempotent_20",
    "idempotent_02",
    "idempotent_11",
    "LEFT_BASIS",
    "RIGHT_BASIS",
    "GEN_X1",
    "GEN_X2",
    "GEN_X2_INV",
    "monomial_image",
    "laurent_to_corner",
    "corner_to_laurent",
    "corner_involution",
    "decompose_left",
    "decompose_right",
    "tensor_to_ideal",
    "tensor_involution",
    "ideal_to_tensor",
    "ideal_membership",
    "batch_ideal_membership",
    "omega_element",
    "omega_candidates",
    "max_window_cap",
]

N = 2
R = 2

WEIGHT_20 = Composition(2, (2, 0))
WEIGHT_02 = Composition(2, (0, 2))
WEIGHT_11 = Composition(2, (1, 1))


def _mat(*entries: tuple[int, int, int]) -> PeriodicMatrix:
    return PeriodicMatrix.from_entries(N, entries)


IDEM_20_MAT = diag_matrix(WEIGHT_20)
IDEM_02_MAT = diag_matrix(WEIGHT_02)
IDEM_11_MAT = diag_matrix(WEIGHT_11)

# Free basis of the row-(2,0) span as a left module over the corner ring,
# in the fixed coordinate order used by CellVector and CellTensor.
LEFT_BASIS: tuple[PeriodicMatrix, ...] = (
    _mat((1, 1, 1), (1, 2, 1)),
    _mat((1, 2, 1), (1, 3, 1)),
    _mat((1, 1, 2)),
    _mat((1, 2, 2)),
)
# Free basis of the column-(2,0) span as a right module: the transposes.
RIGHT_BASIS: tuple[PeriodicMatrix, ...] = tuple(
    m.transpose() for m in LEFT_BASIS
)

GEN_X1 = _mat((1, 1, 1), (1, 3, 1))
GEN_X2 = _mat((1, 3, 2))
GEN_X2_INV = _mat((3, 1, 2))


def idempotent_20() -> AlgebraElement:
    return AlgebraElement.basis(IDEM_20_MAT)


def idempotent_02() -> AlgebraElement:
    return AlgebraElement.basis(IDEM_02_MAT)


def idempotent_11() -> AlgebraElement:
    return AlgebraElement.basis(IDEM_11_MAT)


def max_window_cap() -> int:
    """Global cap on window growth, from AFFSCHUR_MAX_WINDOW (default 64)."""
    raw = os.environ.get("AFFSCHUR_MAX_WINDOW", "64")
    try:
        cap = int(raw)
    except ValueError:
        raise ValueError("AFFSCHUR_MAX_WINDOW must be an integer") from None
    if cap < 1:
        raise ValueError("AFFSCHUR_MAX_WINDOW must be positive")
    return cap


class UndecidedError(RuntimeError):
    """The question does not fit inside the allowed window."""


class NotInWindowError(RuntimeError):
    """No solution exists within the maximal window tried."""


# ---------------------------------------------------------------------------
# corner ring <-> Laurent polynomials


_MONO_CACHE: dict[tuple[int, int], AlgebraElement] = {}


def monomial_image(a: int, b: int) -> AlgebraElement:
    """The corner element representing x1^a x2^b."""
    if a < 0:
        raise ValueError("x1-exponent must be nonnegative")
    key = (a, b)
    cached = _MONO_CACHE.get(key)
    if cached is not None:
        return cached
    if a == 0 and b == 0:
        value = idempotent_20()
    elif a > 0:
        value = multiply(
            monomial_image(a - 1, b), AlgebraElement.basis(GEN_X1)
        )
    elif b > 0:
        value = multiply(
            monomial_image(0, b - 1), AlgebraElement.basis(GEN_X2)
        )
    else:
        value = multiply(
            monomial_image(0, b + 1), AlgebraElement.basis(GEN_X2_INV)
        )
    _MONO_CACHE[key] = value
    return value


def laurent_to_corner(p: LaurentPoly2) -> AlgebraElement:
    """Ring map sending x1, x2, x2^-1 to their corner generators."""
    acc = AlgebraElement.zero(N, R)
    for (a, b), coeff in p.terms.items():
        acc = acc + monomial_image(a, b).scaled(coeff)
    return acc


def _column_support(x: AlgebraElement) -> list[int]:
    return [j for matrix in x.terms for _, j, _ in matrix.entries]


def corner_to_laurent(
    x: AlgebraElement,
    window: int | None = None,
    max_window: int | None = None,
) -> LaurentPoly2:
    """The unique Laurent polynomial mapping onto a corner element.

    Computed by an exact linear solve against the monomial images whose
    support fits the current window; the window grows geometrically up
    to the cap before giving up with :class:`UndecidedError`.
    """
    if not x.supported_on(WEIGHT_20, WEIGHT_20):
        raise ValueError("element does not lie in the corner algebra")
    if x.is_zero():
        return LaurentPoly2.zero()
    cap = max_window if max_window is not None else max_window_cap()
    support = _column_support(x)
    needed = max(abs(j) for j in support)
    w = window if window is not None else max(needed, 1)
    while True:
        if needed <= w:
            result = _corner_solve(x, w)
            if result is not None:
                return result
        if w >= cap:
            raise UndecidedError(
                f"no polynomial preimage within window {w}"
            )
        w = min(2 * w, cap)


def _corner_solve(x: AlgebraElement, w: int) -> LaurentPoly2 | None:
    cols: list[tuple[int, int]] = []
    entries: dict[tuple, Fraction] = {}
    row_labels: set[PeriodicMatrix] = set(x.terms)
    b_min = -((w - 1) // 2) - 1
    for b in range(b_min, (w - 1) // 2 + 1):
        if 2 * b + 1 < -w:
            continue
        a = 0
        while 2 * a + 2 * b + 1 <= w:
            image = monomial_image(a, b)
            cols.append((a, b))
            for matrix, coeff in image.terms.items():
                entries[(matrix, (a, b))] = coeff
                row_labels.add(matrix)
            a += 1
    rhs = dict(x.terms)
    result = solve_many(cols, sorted(row_labels, key=lambda m: m.sort_key()), entries, [rhs])[0]
    if result.status == SolveResult.UNIQUE:
        return LaurentPoly2(
            {key: value for key, value in result.solution.items() if value}
        )
    if result.status == SolveResult.UNDERDETERMINED:
        raise ArithmeticError(
            "monomial images are dependent; corner ring model is broken"
        )
    return None


def corner_involution(p: LaurentPoly2) -> LaurentPoly2:
    """Transpose involution transported to the Laurent model.

    On generators x1 -> x1 x2^-1 and x2 -> x2^-1, hence monomial
    exponents map (a, b) -> (a, -a-b).
    """
    return LaurentPoly2(
        {(a, -a - b): c for (a, b), c in p.terms.items()}
    )


# ---------------------------------------------------------------------------
# free-module decompositions


@dataclass(frozen=True)
class CellVector:
    """Coordinates over the four-element module basis; side is the module
    ("left": row-(2,0) span, "right": column-(2,0) span)."""

    side: str
    coords: tuple[LaurentPoly2, LaurentPoly2, LaurentPoly2, LaurentPoly2]

    def __post_init__(self) -> None:
        if self.side not in ("left", "right"):
            raise ValueError("side must be 'left' or 'right'")
        if len(self.coords) != 4:
            raise ValueError("need exactly four coordinates")

    def to_element(self) -> AlgebraElement:
        acc = AlgebraElement.zero(N, R)
        for idx, poly in enumerate(self.coords):
            if poly.is_zero():
                continue
            b = laurent_to_corner(poly)
            if self.side == "left":
                acc = acc + multiply(b, AlgebraElement.basis(LEFT_BASIS[idx]))
            else:
                acc = acc + multiply(AlgebraElement.basis(RIGHT_BASIS[idx]), b)
        return acc

    def to_json(self) -> dict:
        return {
            "side": self.side,
            "coords": [p.to_json() for p in self.coords],
        }


_X_COORDS: dict[int, tuple[LaurentPoly2, ...]] = {}
_Y_COORDS: dict[int, tuple[LaurentPoly2, ...]] = {}


def _coord_unit(index: int, poly: LaurentPoly2) -> tuple[LaurentPoly2, ...]:
    zero = LaurentPoly2.zero()
    coords = [zero, zero, zero, zero]
    coords[index] = poly
    return tuple(coords)


def _combine(
    left: tuple[LaurentPoly2, ...],
    right: tuple[LaurentPoly2, ...],
    factor: LaurentPoly2,
    shift: LaurentPoly2,
) -> tuple[LaurentPoly2, ...]:
    """factor * left - shift * right, coordinatewise."""
    return tuple(
        factor * lc - shift * rc for lc, rc in zip(left, right)
    )


def _x_coords(l: int) -> tuple[LaurentPoly2, ...]:
    """Coordinates of the pair {1, l} over the left basis, l >= 1."""
    cached = _X_COORDS.get(l)
    if cached is not None:
        return cached
    one = LaurentPoly2.one()
    x1 = LaurentPoly2.x1()
    x2 = LaurentPoly2.x2()
    if l == 1:
        coords = _coord_unit(2, one)
    elif l == 2:
        coords = _coord_unit(0, one)
    elif l == 3:
        coords = _coord_unit(2, x1)
    elif l == 4:
        # the l-2 recurrence lands on the pair {0, 1}, which renormalizes
        # to x2^-1 times the second basis element
        coords = _combine(
            _x_coords(2),
            _coord_unit(1, LaurentPoly2.x2(-1)),
            x1,
            x2,
        )
    elif l == 5:
        coords = _coord_unit(2, x1 * x1 - 2 * x2)
    else:
        coords = _combine(_x_coords(l - 2), _x_coords(l - 4), x1, x2)
    _X_COORDS[l] = coords
    return coords


def _y_coords(l: int) -> tuple[LaurentPoly2, ...]:
    """Coordinates of the pair {2, l} over the left basis, l >= 1."""
    cached = _Y_COORDS.get(l)
    if cached is not None:
        return cached
    one = LaurentPoly2.one()
    x1 = LaurentPoly2.x1()
    x2 = LaurentPoly2.x2()
    if l == 1:
        coords = _coord_unit(0, one)
    elif l == 2:
        coords = _coord_unit(3, one)
    elif l == 3:
        coords = _coord_unit(1, one)
    elif l == 4:
        coords = _coord_unit(3, x1)
    elif l == 5:
        coords = _combine(_y_coords(3), _y_coords(1), x1, x2)
    elif l == 6:
        coords = _combine(_y_coords(4), _y_coords(2), x1, 2 * x2)
    else:
        coords = _combine(_y_coords(l - 2), _y_coords(l - 4), x1, x2)
    _Y_COORDS[l] = coords
    return coords


def _pair_coords(i: int, j: int) -> tuple[LaurentPoly2, ...]:
    """Left-basis coordinates of the row-(2,0) pair matrix {i, j}.

    The smaller column is normalized into {1, 2} by a power of x2, then
    the recurrences above finish the job.
    """
    if i > j:
        i, j = j, i
    if i == j:
        if i % 2:
            return _coord_unit(2, LaurentPoly2.x2((i - 1) // 2))
        return _coord_unit(3, LaurentPoly2.x2(i // 2 - 1))
    if i % 2:
        shift = LaurentPoly2.x2((i - 1) // 2)
        base = _x_coords(j - i + 1)
    else:
        shift = LaurentPoly2.x2(i // 2 - 1)
        base = _y_coords(j - i + 2)
    return tuple(shift * c for c in base)


def decompose_left(x: AlgebraElement) -> CellVector:
    """Coordinates of a row-(2,0) element over the left module basis."""
    if not x.supported_on(WEIGHT_20, None):
        raise ValueError("element does not lie in the row-(2,0) span")
    zero = LaurentPoly2.zero()
    acc = [zero, zero, zero, zero]
    for matrix, coeff in x.terms.items():
        cols: list[int] = []
        for _, j, a in matrix.entries:
            cols.extend([j] * a)
        i, j = cols
        for idx, poly in enumerate(_pair_coords(i, j)):
            if not poly.is_zero():
                acc[idx] = acc[idx] + poly.scaled(coeff)
    return CellVector("left", tuple(acc))


def decompose_right(x: AlgebraElement) -> CellVector:
    """Coordinates of a column-(2,0) element over the right module basis.

    Computed by transposing into the left module and twisting the
    coordinates with the corner involution.
    """
    if not x.supported_on(None, WEIGHT_20):
        raise ValueError("element does not lie in the column-(2,0) span")
    left = decompose_left(x.transpose())
    return CellVector(
        "right", tuple(corner_involution(p) for p in left.coords)
    )


# ---------------------------------------------------------------------------
# ideal tensors


@dataclass(frozen=True)
class CellTensor:
    """4 x 4 Laurent-polynomial coordinates of an ideal element.

    Cell (l, m) multiplies the l-th right-basis element, the coefficient
    ring element, and the m-th left-basis element, in that order.
    """

    coords: tuple[tuple[LaurentPoly2, ...], ...]

    def __post_init__(self) -> None:
        if len(self.coords) != 4 or any(len(row) != 4 for row in self.coords):
            raise ValueError("tensor coordinates must form a 4 x 4 grid")

    @classmethod
    def zero(cls) -> "CellTensor":
        z = LaurentPoly2.zero()
        return cls(tuple((z, z, z, z) for _ in range(4)))

    @classmethod
    def unit(cls, l: int, m: int, poly: LaurentPoly2) -> "CellTensor":
        rows = []
        for li in range(4):
            row = []
            for mi in range(4):
                row.append(poly if (li, mi) == (l, m) else LaurentPoly2.zero())
            rows.append(tuple(row))
        return cls(tuple(rows))

    def cell(self, l: int, m: int) -> LaurentPoly2:
        return self.coords[l][m]

    def __add__(self, other: "CellTensor") -> "CellTensor":
        return CellTensor(
            tuple(
                tuple(a + b for a, b in zip(row_a, row_b))
                for row_a, row_b in zip(self.coords, other.coords)
            )
        )

    def scaled(self, coeff) -> "CellTensor":
        return CellTensor(
            tuple(tuple(p.scaled(coeff) for p in row) for row in self.coords)
        )

    def is_zero(self) -> bool:
        return all(p.is_zero() for row in self.coords for p in row)

    def to_json(self) -> dict:
        return {
            "coords": [[p.to_json() for p in row] for row in self.coords]
        }

    @classmethod
    def from_json(cls, data: dict) -> "CellTensor":
        if not isinstance(data, dict) or "coords" not in data:
            raise ValueError("tensor JSON must hold a 'coords' grid")
        grid = data["coords"]
        if not isinstance(grid, list) or len(grid) != 4:
            raise ValueError("tensor grid must have four rows")
        rows = []
        for row in grid:
            if not isinstance(row, list) or len(row) != 4:
                raise ValueError("tensor grid must have four columns")
            rows.append(tuple(LaurentPoly2.from_json(p) for p in row))
        return cls(tuple(rows))


_OMEGA_CACHE: dict[tuple[int, int, int, int], AlgebraElement] = {}
_LEFT_PRODUCT_CACHE: dict[tuple[int, int, int], AlgebraElement] = {}


def omega_element(l: int, m: int, a: int, b: int) -> AlgebraElement:
    """The ideal element (right basis l) * x1^a x2^b * (left basis m)."""
    key = (l, m, a, b)
    cached = _OMEGA_CACHE.get(key)
    if cached is not None:
        return cached
    left_key = (l, a, b)
    left = _LEFT_PRODUCT_CACHE.get(left_key)
    if left is None:
        left = multiply(
            AlgebraElement.basis(RIGHT_BASIS[l]), monomial_image(a, b)
        )
        _LEFT_PRODUCT_CACHE[left_key] = left
    value = multiply(left, AlgebraElement.basis(LEFT_BASIS[m]))
    _OMEGA_CACHE[key] = value
    return value


def tensor_to_ideal(t: CellTensor) -> AlgebraElement:
    """Contract a coordinate tensor to the ideal element it represents."""
    acc: dict[PeriodicMatrix, Fraction] = {}
    for l in range(4):
        for m in range(4):
            for (a, b), coeff in t.cell(l, m).terms.items():
                for matrix, c in omega_element(l, m, a, b).terms.items():
                    acc[matrix] = acc.get(matrix, Fraction(0)) + coeff * c
    return AlgebraElement(N, R, acc)


def tensor_involution(t: CellTensor) -> CellTensor:
    """Swap the two tensor legs, twisting coefficients by the involution."""
    return CellTensor(
        tuple(
            tuple(corner_involution(t.cell(m, l)) for m in range(4))
            for l in range(4)
        )
    )


_ROW_SIGNATURE = (WEIGHT_11, WEIGHT_11, WEIGHT_20, WEIGHT_02)
_COL_SIGNATURE = (WEIGHT_11, WEIGHT_11, WEIGHT_20, WEIGHT_02)


def _signature_blocks() -> dict[
    tuple[Composition, Composition], list[tuple[int, int]]
]:
    blocks: dict[tuple[Composition, Composition], list[tuple[int, int]]] = {}
    for l in range(4):
        for m in range(4):
            key = (_ROW_SIGNATURE[l], _COL_SIGNATURE[m])
            blocks.setdefault(key, []).append((l, m))
    return blocks


SIGNATURE_BLOCKS = _signature_blocks()


def omega_candidates(
    window: int, pairs: Iterable[tuple[int, int]] | None = None
) -> list[tuple[tuple[int, int, int, int], AlgebraElement]]:
    """All coordinate cells whose ideal element fits inside the window.

    Returned in a fixed deterministic order as (label, element) pairs,
    label = (l, m, a, b).
    """
    if pairs is None:
        pairs = [(l, m) for l in range(4) for m in range(4)]
    out = []
    for l, m in sorted(pairs):
        b = -(window + 3) // 2 - 1
        while 2 * b + 1 <= window + 2:
            if 2 * b + 1 >= -window - 2:
                a = 0
                while 2 * a + 2 * b + 1 <= window + 2:
                    element = omega_element(l, m, a, b)
                    support = _column_support(element)
                    if support and all(-window <= j <= window for j in support):
                        out.append(((l, m, a, b), element))
                    a += 1
            b += 1
    return out


def _split_by_signature(
    x: AlgebraElement,
) -> dict[tuple[Composition, Composition], dict[PeriodicMatrix, Fraction]]:
    parts: dict = {}
    for matrix, coeff in x.terms.items():
        key = (matrix.row_vector(), matrix.col_vector())
        parts.setdefault(key, {})[matrix] = coeff
    return parts


def ideal_to_tensor(
    x: AlgebraElement,
    window: int | None = None,
    max_window: int | None = None,
) -> CellTensor:
    """Tensor coordinates of an ideal element, by exact linear solve.

    The system splits into independent blocks indexed by the row/column
    weights of the basis matrices involved; each block is solved within
    the window, growing it up to the cap.  Raises
    :class:`NotInWindowError` when some block is inconsistent at the
    final window (the element is not an ideal member there) and
    :class:`UndecidedError` when the question never fit the window.
    """
    if x.n != N or x.r != R:
        raise ValueError("ideal elements live at n = r = 2")
    if x.is_zero():
        return CellTensor.zero()
    cap = max_window if max_window is not None else max_window_cap()
    support = _column_support(x)
    needed = max(abs(j) for j in support)
    w = window if window is not None else max(needed, 1)
    w = min(w, cap)
    saw_inconsistent_at_cap = False
    while True:
        if needed <= w:
            tensor = _tensor_solve(x, w)
            if tensor is not None:
                verified = tensor_to_ideal(tensor)
                if verified != x:
                    raise ArithmeticError(
                        "solved tensor fails to reproduce its element"
                    )
                return tensor
            if w >= cap:
                saw_inconsistent_at_cap = True
        if w >= cap:
            if saw_inconsistent_at_cap:
                raise NotInWindowError(
                    f"not an ideal member within window {w}"
                )
            raise UndecidedError(
                f"element support exceeds the window cap {cap}"
            )
        w = min(2 * w, cap)


def _tensor_solve(x: AlgebraElement, window: int) -> CellTensor | None:
    parts = _split_by_signature(x)
    tensor = CellTensor.zero()
    for signature, rhs in parts.items():
        pairs = SIGNATURE_BLOCKS.get(signature)
        if pairs is None:
            return None
        candidates = omega_candidates(window, pairs)
        cols = [label for label, _ in candidates]
        entries: dict[tuple, Fraction] = {}
        row_labels: set[PeriodicMatrix] = set(rhs)
        for label, element in candidates:
            for matrix, coeff in element.terms.items():
                entries[(matrix, label)] = coeff
                row_labels.add(matrix)
        result = solve_many(
            cols,
            sorted(row_labels, key=lambda mx: mx.sort_key()),
            entries,
            [rhs],
        )[0]
        if result.status == SolveResult.INCONSISTENT:
            return None
        if result.status == SolveResult.UNDERDETERMINED:
            raise ArithmeticError(
                "window tensor system is underdetermined; independence broken"
            )
        for (l, m, a, b), value in result.solution.items():
            if value:
                tensor = tensor + CellTensor.unit(
                    l, m, LaurentPoly2.monomial(a, b, value)
                )
    return tensor


@dataclass(frozen=True)
class MembershipResult:
    """Verdict of an ideal membership test at bounded window."""

    status: str
    tensor: CellTensor | None
    window: int

    MEMBER = "member"
    NOT_MEMBER = "not-member-within-window"
    UNDECIDED = "undecided"

    @property
    def is_member(self) -> bool:
        return self.status == self.MEMBER


def ideal_membership(
    x: AlgebraElement,
    window: int | None = None,
    max_window: int | None = None,
) -> MembershipResult:
    """Windowed membership test for the two-sided ideal.

    A member verdict carries the certificate tensor, already re-verified
    by contracting it back to the element.
    """
    cap = max_window if max_window is not None else max_window_cap()
    try:
        tensor = ideal_to_tensor(x, window=window, max_window=cap)
    except NotInWindowError:
        return MembershipResult(MembershipResult.NOT_MEMBER, None, cap)
    except UndecidedError:
        return MembershipResult(MembershipResult.UNDECIDED, None, cap)
    return MembershipResult(MembershipResult.MEMBER, tensor, cap)


def batch_ideal_membership(
    elements: Sequence[AlgebraElement], window: int
) -> list[MembershipResult]:
    """Membership tests for many elements at one fixed window.

    The elimination of each signature block is shared across all inputs,
    which is much cheaper than testing the elements one at a time.
    """
    results: list[MembershipResult | None] = []
    # signature -> (rhs dicts, owning element indices)
    block_rhs: dict = {}
    splits: list[dict | None] = []
    for idx, x in enumerate(elements):
        if x.n != N or x.r != R:
            raise ValueError("ideal elements live at n = r = 2")
        if x.is_zero():
            results.append(
                MembershipResult(MembershipResult.MEMBER, CellTensor.zero(), window)
            )
            splits.append(None)
            continue
        support = _column_support(x)
        if max(abs(j) for j in support) > window:
            results.append(
                MembershipResult(MembershipResult.UNDECIDED, None, window)
            )
            splits.append(None)
            continue
        results.append(None)
        parts = _split_by_signature(x)
        splits.append(parts)
        for signature, rhs in parts.items():
            block_rhs.setdefault(signature, ([], []))
            block_rhs[signature][0].append(rhs)
            block_rhs[signature][1].append(idx)

    # one shared solve per signature block
    solutions: dict[tuple, dict[int, SolveResult]] = {}
    for signature, (rhs_list, owners) in block_rhs.items():
        pairs = SIGNATURE_BLOCKS[signature]
        candidates = omega_candidates(window, pairs)
        cols = [label for label, _ in candidates]
        entries: dict[tuple, Fraction] = {}
        row_labels: set[PeriodicMatrix] = set()
        for label, element in candidates:
            for matrix, coeff in element.terms.items():
                entries[(matrix, label)] = coeff
                row_labels.add(matrix)
        for rhs in rhs_list:
            row_labels.update(rhs)
        block_results = solve_many(
            cols,
            sorted(row_labels, key=lambda mx: mx.sort_key()),
            entries,
            rhs_list,
        )
        solutions[signature] = dict(zip(owners, block_results))

    for idx, x in enumerate(elements):
        if results[idx] is not None:
            continue
        tensor = CellTensor.zero()
        verdict = MembershipResult.MEMBER
        for signature in splits[idx]:
            result = solutions[signature][idx]
            if result.status == SolveResult.INCONSISTENT:
                verdict = MembershipResult.NOT_MEMBER
                break
            if result.status == SolveResult.UNDERDETERMINED:
                raise ArithmeticError(
                    "window tensor system is underdetermined; independence broken"
                )
            for (l, m, a, b), value in result.solution.items():
                if value:
                    tensor = tensor + CellTensor.unit(
                        l, m, LaurentPoly2.monomial(a, b, value)
                    )
        if verdict == MembershipResult.MEMBER:
            if tensor_to_ideal(tensor) != x:
                raise ArithmeticError(
                    "solved tensor fails to reproduce its element"
                )
            results[idx] = MembershipResult(verdict, tensor, window)
        else:
            results[idx] = MembershipResult(verdict, None, window)
    return results  # type: ignore[return-value]
