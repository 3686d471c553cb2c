import random
from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from affschur import SolveResult, SparseSystem, rank, solve_many, solve_unique


def system(rows_data, rhs=None):
    """Build a system from a dense list-of-lists description."""
    nrows = len(rows_data)
    ncols = len(rows_data[0]) if rows_data else 0
    cols = [f"c{j}" for j in range(ncols)]
    rows = [f"r{i}" for i in range(nrows)]
    entries = {}
    for i, row in enumerate(rows_data):
        for j, value in enumerate(row):
            if value:
                entries[(f"r{i}", f"c{j}")] = Fraction(value)
    rhs_map = {}
    if rhs is not None:
        for i, value in enumerate(rhs):
            if value:
                rhs_map[f"r{i}"] = Fraction(value)
    return SparseSystem(cols, rows, entries, rhs_map)


class TestSolveUnique:
    def test_identity_system(self):
        sys_ = system([[1, 0], [0, 1]], [3, Fraction(-5, 2)])
        result = solve_unique(sys_)
        assert result.status == SolveResult.UNIQUE
        assert result.solution == {"c0": 3, "c1": Fraction(-5, 2)}

    def test_underdetermined(self):
        result = solve_unique(system([[1, 1]], [1]))
        assert result.status == SolveResult.UNDERDETERMINED

    def test_inconsistent(self):
        result = solve_unique(system([[1, 1], [1, 1]], [1, 2]))
        assert result.status == SolveResult.INCONSISTENT

    def test_rectangular_consistent(self):
        sys_ = system([[2, 1], [1, 1], [3, 2]], [5, 3, 8])
        result = solve_unique(sys_)
        assert result.status == SolveResult.UNIQUE
        assert result.solution == {"c0": 2, "c1": 1}

    def test_rational_entries(self):
        sys_ = system(
            [[Fraction(1, 2), 0], [0, Fraction(2, 3)]], [1, Fraction(1, 3)]
        )
        result = solve_unique(sys_)
        assert result.solution == {"c0": 2, "c1": Fraction(1, 2)}

    @given(st.data())
    @settings(max_examples=50, deadline=None)
    def test_substituting_back_reproduces_rhs(self, data):
        n = data.draw(st.integers(min_value=1, max_value=5))
        entries = [
            [
                Fraction(
                    data.draw(st.integers(min_value=-4, max_value=4)),
                    data.draw(st.integers(min_value=1, max_value=3)),
                )
                for _ in range(n)
            ]
            for _ in range(n + data.draw(st.integers(min_value=0, max_value=2)))
        ]
        solution = [
            Fraction(
                data.draw(st.integers(min_value=-4, max_value=4)),
                data.draw(st.integers(min_value=1, max_value=3)),
            )
            for _ in range(n)
        ]
        rhs = [
            sum(row[j] * solution[j] for j in range(n)) for row in entries
        ]
        result = solve_unique(system(entries, rhs))
        assert result.status in (
            SolveResult.UNIQUE,
            SolveResult.UNDERDETERMINED,
        )
        if result.status == SolveResult.UNIQUE:
            got = [result.solution[f"c{j}"] for j in range(n)]
            for row, value in zip(entries, rhs):
                assert sum(r * g for r, g in zip(row, got)) == value


class TestSolveMany:
    def test_mixed_verdicts_share_elimination(self):
        cols = ["x", "y"]
        rows = ["r0", "r1", "r2"]
        entries = {
            ("r0", "x"): Fraction(1),
            ("r1", "y"): Fraction(1),
            ("r2", "x"): Fraction(1),
            ("r2", "y"): Fraction(1),
        }
        rhs_good = {"r0": Fraction(2), "r1": Fraction(3), "r2": Fraction(5)}
        rhs_bad = {"r0": Fraction(2), "r1": Fraction(3), "r2": Fraction(6)}
        good, bad = solve_many(cols, rows, entries, [rhs_good, rhs_bad])
        assert good.status == SolveResult.UNIQUE
        assert good.solution == {"x": 2, "y": 3}
        assert bad.status == SolveResult.INCONSISTENT


class TestRank:
    def test_zero_matrix(self):
        assert rank(system([[0, 0], [0, 0]])) == 0

    def test_identity(self):
        assert rank(system([[1, 0, 0], [0, 1, 0], [0, 0, 1]])) == 3

    def test_rank_deficient(self):
        assert rank(system([[1, 2], [2, 4]])) == 1

    @given(st.data())
    @settings(max_examples=40, deadline=None)
    def test_invariant_under_row_permutation_and_scaling(self, data):
        nrows = data.draw(st.integers(min_value=1, max_value=4))
        ncols = data.draw(st.integers(min_value=1, max_value=4))
        entries = [
            [data.draw(st.integers(min_value=-3, max_value=3)) for _ in range(ncols)]
            for _ in range(nrows)
        ]
        base = rank(system(entries))
        seed = data.draw(st.integers(min_value=0, max_value=10**6))
        rng = random.Random(seed)
        shuffled = entries[:]
        rng.shuffle(shuffled)
        scaled = []
        for row in shuffled:
            factor = rng.choice([1, 2, 3, Fraction(1, 2), -1])
            scaled.append([v * factor for v in row])
        assert rank(system(scaled)) == base
