import random
from fractions import Fraction

import pytest
from hypothesis import settings
from hypothesis import strategies as st

# exact big-integer arithmetic has uneven per-example cost; wall-clock
# deadlines would only add flakiness to tests of exact identities
settings.register_profile("exact", deadline=None)
settings.load_profile("exact")

from affschur import (
    AlgebraElement,
    Composition,
    PeriodicMatrix,
    WeylElement,
    diag_matrix,
    pair_to_matrix,
)


def mat(n, *entries):
    return PeriodicMatrix.from_entries(n, entries)


def basis(n, *entries):
    return AlgebraElement.basis(mat(n, *entries))


@pytest.fixture
def e_lam():
    return AlgebraElement.basis(diag_matrix(Composition(2, (2, 0))))


@pytest.fixture
def e_mu():
    return AlgebraElement.basis(diag_matrix(Composition(2, (0, 2))))


@pytest.fixture
def e_nu():
    return AlgebraElement.basis(diag_matrix(Composition(2, (1, 1))))


@pytest.fixture
def rng():
    return random.Random(20240817)


# --- hypothesis strategies -------------------------------------------------

small_nr = st.sampled_from([(1, 1), (1, 2), (2, 1), (2, 2), (2, 3), (3, 2), (3, 3)])


@st.composite
def weyl_elements(draw, r=None):
    if r is None:
        r = draw(st.integers(min_value=1, max_value=3))
    sigma = draw(st.permutations(list(range(1, r + 1))))
    eps = tuple(
        draw(st.integers(min_value=-2, max_value=2)) for _ in range(r)
    )
    return WeylElement(tuple(sigma), eps)


@st.composite
def index_tuples(draw, r=None, lo=-5, hi=6):
    if r is None:
        r = draw(st.integers(min_value=1, max_value=3))
    return tuple(
        draw(st.integers(min_value=lo, max_value=hi)) for _ in range(r)
    )


@st.composite
def basis_matrices(draw, nr=None):
    if nr is None:
        n, r = draw(small_nr)
    else:
        n, r = nr
    rows = tuple(
        sorted(draw(st.integers(min_value=1, max_value=n)) for _ in range(r))
    )
    cols = tuple(
        draw(st.integers(min_value=-4, max_value=5)) for _ in range(r)
    )
    return pair_to_matrix(rows, cols, n)


@st.composite
def algebra_elements(draw, nr=(2, 2)):
    n, r = nr
    terms = {}
    for _ in range(draw(st.integers(min_value=1, max_value=3))):
        matrix = draw(basis_matrices(nr=nr))
        coeff = Fraction(
            draw(st.integers(min_value=-4, max_value=4)),
            draw(st.integers(min_value=1, max_value=3)),
        )
        if coeff:
            terms[matrix] = terms.get(matrix, Fraction(0)) + coeff
    return AlgebraElement(n, r, terms)
