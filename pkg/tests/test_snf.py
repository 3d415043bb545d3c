from itertools import combinations
from math import gcd
from random import Random

import hypothesis.strategies as st
from hypothesis import given, settings

from magnuslie import fp_rank, integer_row_space, smith_normal_form


# -- independent oracle: divisor chain from gcds of k x k minors -----------


def _det(matrix):
    n = len(matrix)
    if n == 0:
        return 1
    if n == 1:
        return matrix[0][0]
    total = 0
    sign = 1
    for j in range(n):
        minor = [row[:j] + row[j + 1:] for row in matrix[1:]]
        total += sign * matrix[0][j] * _det(minor)
        sign = -sign
    return total


def minor_gcd_divisors(rows):
    """d_1..d_r with d_1*..*d_k = gcd of all k x k minors."""
    nrows = len(rows)
    ncols = len(rows[0]) if rows else 0
    gcds = [1]
    for k in range(1, min(nrows, ncols) + 1):
        g = 0
        for row_idx in combinations(range(nrows), k):
            for col_idx in combinations(range(ncols), k):
                sub = [[rows[i][j] for j in col_idx] for i in row_idx]
                g = gcd(g, abs(_det(sub)))
        if g == 0:
            break
        gcds.append(g)
    return tuple(gcds[k] // gcds[k - 1] for k in range(1, len(gcds)))


def test_known_divisors():
    assert smith_normal_form([[1]]).divisors == (1,)
    assert smith_normal_form([[2]]).divisors == (2,)
    assert smith_normal_form([[2, 0], [0, 3]]).divisors == (1, 6)
    assert smith_normal_form([[0, 0], [0, 0]]).rank == 0
    assert smith_normal_form([]).rank == 0
    result = smith_normal_form([[2, 4], [6, 8]])
    assert result.rank == 2 and result.divisors == (2, 4)
    assert result.nontrivial == (2, 4)


def test_sparse_and_dense_rows_agree():
    dense = [[3, 0, -6], [0, 5, 10], [9, 0, 0]]
    sparse = [{0: 3, 2: -6}, {1: 5, 2: 10}, {0: 9}]
    assert smith_normal_form(dense) == smith_normal_form(sparse)


entries = st.integers(min_value=-9, max_value=9)


@settings(max_examples=200, deadline=None)
@given(st.integers(min_value=1, max_value=4), st.integers(min_value=1, max_value=4), st.data())
def test_divisors_match_minor_gcd_oracle(nrows, ncols, data):
    rows = [[data.draw(entries) for _ in range(ncols)] for _ in range(nrows)]
    expected = minor_gcd_divisors(rows)
    result = smith_normal_form(rows)
    assert result.divisors == expected
    assert result.rank == len(expected)


@settings(max_examples=200, deadline=None)
@given(st.integers(min_value=1, max_value=4), st.integers(min_value=1, max_value=4),
       st.sampled_from([2, 3, 5, 7]), st.data())
def test_fp_rank_counts_divisors_coprime_to_p(nrows, ncols, p, data):
    rows = [[data.draw(entries) for _ in range(ncols)] for _ in range(nrows)]
    divisors = smith_normal_form(rows).divisors
    expected = sum(1 for d in divisors if d % p)
    assert fp_rank(rows, p) == expected


def test_row_space_invariance_under_row_operations():
    rng = Random(23)
    for _ in range(100):
        nrows = rng.randrange(1, 5)
        ncols = rng.randrange(1, 5)
        rows = [[rng.randrange(-6, 7) for _ in range(ncols)] for _ in range(nrows)]
        reference = integer_row_space(rows, ncols)

        shuffled = rows[:]
        rng.shuffle(shuffled)
        assert integer_row_space(shuffled, ncols) == reference

        # adding an integer multiple of one row to another keeps the span
        if nrows >= 2:
            i, j = rng.sample(range(nrows), 2)
            factor = rng.randrange(-3, 4)
            modified = [row[:] for row in rows]
            modified[i] = [a + factor * b for a, b in zip(modified[i], modified[j])]
            assert integer_row_space(modified, ncols) == reference

        # negating a row keeps the span
        k = rng.randrange(nrows)
        negated = [row[:] for row in rows]
        negated[k] = [-a for a in negated[k]]
        assert integer_row_space(negated, ncols) == reference


def test_row_space_distinguishes_index_two_subgroup():
    full = integer_row_space([[1, 0], [0, 1]], 2)
    doubled = integer_row_space([[2, 0], [0, 1]], 2)
    assert full != doubled
