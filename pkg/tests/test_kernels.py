"""Backend equivalence: the compiled kernels must agree with the pure
Python reference on everything, and overflow in the 64-bit path must
fall back, not corrupt."""

import random

import pytest

from hornlr import _kernels
from hornlr._kernels import pure

compiled = pytest.importorskip(
    "hornlr._kernels._speedups", reason="compiled kernels not built"
)


def _random_symmetric_01(rng, n):
    rows = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < 0.5:
                rows[i][j] = rows[j][i] = 1
    return rows


def test_char_poly_backends_agree_on_adjacency_matrices():
    rng = random.Random(1)
    for _ in range(30):
        n = rng.randint(1, 12)
        rows = _random_symmetric_01(rng, n)
        assert compiled.char_poly(rows) == pure.char_poly(rows)


def test_char_poly_backends_agree_on_general_int_matrices():
    rng = random.Random(2)
    for _ in range(30):
        n = rng.randint(1, 6)
        rows = [[rng.randint(-3, 3) for _ in range(n)] for _ in range(n)]
        assert compiled.char_poly(rows) == pure.char_poly(rows)


def test_char_poly_compiled_overflow_raises():
    big = 10**12
    rows = [[0, big, 0], [big, 0, big], [0, big, 0]]
    with pytest.raises(OverflowError):
        compiled.char_poly(rows)
    # dispatcher transparently falls back to exact arithmetic
    expected = [1, 0, -2 * big * big, 0]
    assert _kernels.char_poly(rows) == expected
    assert pure.char_poly(rows) == expected


def test_char_poly_entry_too_large_raises():
    with pytest.raises(OverflowError):
        compiled.char_poly([[2**70]])
    assert _kernels.char_poly([[2**70]]) == [1, -(2**70)]


def test_lr_backends_agree():
    rng = random.Random(3)
    from oracles import all_partitions

    pool = all_partitions(8, max_part=5, max_length=4)
    for _ in range(300):
        alpha = rng.choice(pool)
        beta = rng.choice(pool)
        gammas = [g for g in pool if sum(g) == sum(alpha) + sum(beta)]
        if not gammas:
            continue
        gamma = rng.choice(gammas)
        if len(alpha) > len(gamma) or any(
            a > g for a, g in zip(alpha, gamma)
        ):
            continue
        inner = tuple(alpha) + (0,) * (len(gamma) - len(alpha))
        for limit in (0, 1):
            assert compiled.lr_count(gamma, inner, beta, limit) == pure.lr_count(
                gamma, inner, beta, limit
            ), (gamma, inner, beta, limit)


def test_dispatcher_reports_a_backend():
    assert _kernels.BACKEND in ("pure", "compiled")
