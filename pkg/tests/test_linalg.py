"""Sparse exact elimination: ranks and kernels against dense oracles."""

import random
from fractions import Fraction

from koszulforge.linalg import Eliminator, columns_rank
from koszulforge.polyring import PrimeField, QQ


def dense_rank(rows, mod=None):
    """Fraction Gaussian elimination on dense row lists (oracle)."""
    rows = [[Fraction(x) for x in r] for r in rows]
    rank = 0
    cols = len(rows[0]) if rows else 0
    r = 0
    for c in range(cols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        r += 1
        rank += 1
    return rank


def sparse(vec):
    return {i: Fraction(x) for i, x in enumerate(vec) if x}


def test_rank_against_dense_oracle():
    rng = random.Random(42)
    for _ in range(30):
        m, n = rng.randint(1, 6), rng.randint(1, 6)
        rows = [[rng.randint(-3, 3) for _ in range(n)] for _ in range(m)]
        assert columns_rank([sparse(r) for r in rows]) == dense_rank(rows)


def test_kernel_vectors_annihilate_columns():
    rng = random.Random(7)
    for _ in range(30):
        m, n = rng.randint(1, 5), rng.randint(1, 7)
        cols = [[rng.randint(-2, 2) for _ in range(m)] for _ in range(n)]
        sparse_cols = [sparse(c) for c in cols]
        kernel = Eliminator(QQ).kernel_of_columns(sparse_cols)
        # dimension check: n - rank
        assert len(kernel) == n - dense_rank([list(c) for c in zip(*cols)]) \
            if cols and any(any(c) for c in cols) else True
        for vec in kernel:
            combo = [Fraction(0)] * m
            for j, c in vec.items():
                for i, x in enumerate(cols[j]):
                    combo[i] += c * x
            assert all(x == 0 for x in combo)
            assert vec  # kernel vectors are nonzero


def test_insert_reports_rank_growth():
    elim = Eliminator(QQ)
    assert elim.insert(sparse([1, 0, 1]))
    assert elim.insert(sparse([0, 1, 0]))
    assert not elim.insert(sparse([1, 1, 1]))
    assert elim.rank == 2


def test_reduce_handles_pivot_chains():
    # rows whose eliminations cascade into later pivot positions
    elim = Eliminator(QQ)
    elim.insert(sparse([1, 1, 0, 0]))
    elim.insert(sparse([0, 1, 1, 0]))
    elim.insert(sparse([0, 0, 1, 1]))
    residual = elim.reduce(sparse([1, 0, 0, 0]))
    assert set(residual) == {3}
    assert not elim.reduce(sparse([1, 0, -1, 0]))  # r1 - r2, in the span


def test_prime_field_elimination_matches_rationals():
    rng = random.Random(3)
    F = PrimeField(32003)
    for _ in range(20):
        m, n = rng.randint(1, 5), rng.randint(1, 5)
        rows = [[rng.randint(-3, 3) for _ in range(n)] for _ in range(m)]
        rq = columns_rank([sparse(r) for r in rows], QQ)
        rp = columns_rank([{i: F.convert(x) for i, x in enumerate(r) if x}
                           for r in rows], F)
        assert rq == rp  # entries are tiny, no accidental p-divisibility
