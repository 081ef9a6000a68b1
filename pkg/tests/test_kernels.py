import random
from fractions import Fraction

import pytest

from stochpoly import _kernels
from stochpoly._kernels import pure
from stochpoly.polytope import build_lp_polytope

needs_compiled = pytest.mark.skipif(
    "compiled" not in _kernels.available_backends(),
    reason="compiled kernel not built",
)


def test_rank_int_basics():
    assert _kernels.rank_int([]) == 0
    assert _kernels.rank_int([[1, 0], [0, 1]]) == 2
    assert _kernels.rank_int([[1, 2], [2, 4]]) == 1
    assert _kernels.rank_int([[0, 0], [0, 0]]) == 0
    assert _kernels.rank_int([[1, 2, 3]]) == 1
    assert _kernels.rank_int([[1], [2], [3]]) == 1


def test_rank_int_handles_big_values():
    big = 10**30
    assert _kernels.rank_int([[big, 0], [0, big]]) == 2
    assert _kernels.rank_int([[big, big], [big, big]]) == 1


def test_rank_int_agrees_with_float_rank_on_random_small():
    import numpy as np

    rng = random.Random(77)
    for _ in range(50):
        m = rng.randrange(1, 6)
        k = rng.randrange(1, 6)
        rows = [[rng.randrange(-3, 4) for _ in range(k)] for _ in range(m)]
        got = _kernels.rank_int(rows)
        expected = np.linalg.matrix_rank(np.array(rows, dtype=float))
        assert got == int(expected)


def _fraction_solve(a_rows, free_cols):
    """Reference solve with Fractions: unique nonnegative solution or None."""
    m = len(a_rows)
    r = len(free_cols)
    mat = [[Fraction(a_rows[i][c]) for c in free_cols] + [Fraction(1)] for i in range(m)]
    row = 0
    pivots = []
    for col in range(r):
        piv = next((i for i in range(row, m) if mat[i][col] != 0), None)
        if piv is None:
            return None  # not unique
        mat[row], mat[piv] = mat[piv], mat[row]
        pv = mat[row][col]
        mat[row] = [x / pv for x in mat[row]]
        for i in range(m):
            if i != row and mat[i][col] != 0:
                f = mat[i][col]
                mat[i] = [x - f * y for x, y in zip(mat[i], mat[row])]
        pivots.append(col)
        row += 1
    for i in range(row, m):
        if mat[i][r] != 0:
            return None
    xs = [mat[i][r] for i in range(r)]
    if any(x < 0 for x in xs):
        return None
    return xs


def test_solve_for_free_columns_matches_fraction_solve():
    rng = random.Random(31337)
    hp = build_lp_polytope(2)
    rows = [list(r) for r in hp.rows]
    import itertools

    for free in itertools.combinations(range(8), 7):
        got = pure.solve_for_free_columns(rows, free)
        expected = _fraction_solve(rows, free)
        if expected is None:
            assert got is None
        else:
            assert got is not None
            den, nums = got
            assert [Fraction(v, den) for v in nums] == expected
    # random rectangular 0/1 systems
    for _ in range(60):
        m = rng.randrange(2, 7)
        nc = rng.randrange(2, 7)
        a = [[rng.randrange(0, 2) for _ in range(nc)] for _ in range(m)]
        r = rng.randrange(1, min(m, nc) + 1)
        free = sorted(rng.sample(range(nc), r))
        got = pure.solve_for_free_columns(a, free)
        expected = _fraction_solve(a, free)
        if expected is None:
            assert got is None
        else:
            den, nums = got
            assert [Fraction(v, den) for v in nums] == expected


def test_pure_bfs_on_n2_polytope():
    hp = build_lp_polytope(2)
    sols = _kernels.basic_feasible_solutions(hp.rows, hp.rank, backend="pure")
    assert len(sols) == 2
    for den, nums in sols:
        assert den == 1
        assert sorted(nums) == [0, 0, 0, 0, 1, 1, 1, 1]


@needs_compiled
def test_lane_agreement_n2():
    hp = build_lp_polytope(2)
    fast = _kernels.basic_feasible_solutions(hp.rows, hp.rank, backend="compiled")
    slow = _kernels.basic_feasible_solutions(hp.rows, hp.rank, backend="pure")
    assert fast == slow


@needs_compiled
def test_lane_agreement_random_systems():
    rng = random.Random(4242)
    for _ in range(25):
        m = rng.randrange(2, 8)
        nc = rng.randrange(2, 8)
        a = [[rng.randrange(0, 2) for _ in range(nc)] for _ in range(m)]
        r = _kernels.rank_int(a)
        if r == 0:
            continue
        fast = _kernels.basic_feasible_solutions(a, r, backend="compiled")
        slow = _kernels.basic_feasible_solutions(a, r, backend="pure")
        assert fast == slow


@needs_compiled
@pytest.mark.slow
def test_lane_agreement_n3_full():
    # the complete 2.2M-subset sweep on both lanes; several minutes on the
    # pure lane, hence opt-in via `pytest -m slow`
    hp = build_lp_polytope(3)
    fast = _kernels.basic_feasible_solutions(hp.rows, hp.rank, backend="compiled")
    slow = _kernels.basic_feasible_solutions(hp.rows, hp.rank, backend="pure")
    assert fast == slow


@needs_compiled
def test_lane_agreement_n3_prefix():
    # first slice of the n = 3 subset space, cheap enough for every run
    hp = build_lp_polytope(3)
    fast = _kernels.basic_feasible_solutions(
        hp.rows, hp.rank, subset_limit=20000, backend="compiled"
    )
    slow = _kernels.basic_feasible_solutions(
        hp.rows, hp.rank, subset_limit=20000, backend="pure"
    )
    assert fast == slow
    assert len(fast) > 0


def test_pure_guard_falls_back_to_bigint(monkeypatch):
    # force the int64 guard to trip so every chunk reruns on Python ints
    hp = build_lp_polytope(2)
    reference = _kernels.basic_feasible_solutions(hp.rows, hp.rank, backend="pure")
    monkeypatch.setattr(pure, "_GUARD", 0)
    guarded = _kernels.basic_feasible_solutions(hp.rows, hp.rank, backend="pure")
    assert guarded == reference


def test_unknown_backend_rejected():
    hp = build_lp_polytope(2)
    with pytest.raises(ValueError):
        _kernels.basic_feasible_solutions(hp.rows, hp.rank, backend="gpu")


def test_solutions_satisfy_system():
    hp = build_lp_polytope(2)
    for den, nums in _kernels.basic_feasible_solutions(hp.rows, hp.rank):
        x = [Fraction(v, den) for v in nums]
        assert all(v >= 0 for v in x)
        for row in hp.rows:
            assert sum(c * v for c, v in zip(row, x)) == 1
