"""Seed-fixed random minimal realizations for property tests.

A canonical G-selfadjoint pair is assembled from Jordan blocks J_k(alpha) with
rational real alpha paired with sign-weighted flip (sip) Gram blocks, then
conjugated by a random invertible rational matrix: A = P^{-1} A0 P and
G = P^* G0 P preserve G A = A^* G.  A random parameter map Gamma is kept only
when the controllability block has full rank.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import List, Optional, Tuple

from .field import QQi
from .matrices import ConstMatrix
from .realization import Realization, minimality, validate


def _rand_frac(rng: random.Random, span: int = 2, den: int = 2) -> Fraction:
    # small numerators and denominators keep the exact arithmetic fast
    return Fraction(rng.randint(-span, span), rng.choice((1, 1, 1, den)))


def _rand_qqi(rng: random.Random, span: int = 2) -> QQi:
    return QQi(_rand_frac(rng, span), _rand_frac(rng, span))


def _jordan_block(alpha: Fraction, k: int) -> ConstMatrix:
    grid = [[QQi(alpha) if i == j else (QQi(1) if j == i + 1 else QQi(0)) for j in range(k)] for i in range(k)]
    return ConstMatrix(grid)


def _sip(k: int, sign: int) -> ConstMatrix:
    return ConstMatrix([[QQi(sign) if i + j == k - 1 else QQi(0) for j in range(k)] for i in range(k)])


def _block_diag(blocks: List[ConstMatrix]) -> ConstMatrix:
    n = sum(b.rows for b in blocks)
    grid = [[QQi(0)] * n for _ in range(n)]
    off = 0
    for b in blocks:
        for i in range(b.rows):
            for j in range(b.cols):
                grid[off + i][off + j] = b.entries[i][j]
        off += b.rows
    return ConstMatrix(grid)


def _rand_invertible(rng: random.Random, n: int) -> ConstMatrix:
    """Sparse unimodular-style conjugation: identity plus a few +-1 or +-i
    off-diagonal entries, so conjugated matrices keep small coefficients."""
    while True:
        grid = [[QQi(1) if i == j else QQi(0) for j in range(n)] for i in range(n)]
        for _ in range(n + rng.randint(0, n)):
            i, j = rng.randrange(n), rng.randrange(n)
            if i != j:
                grid[i][j] = rng.choice((QQi(1), QQi(-1), QQi(0, 1), QQi(0, -1)))
        p = ConstMatrix(grid)
        if p.det():
            return p


def random_realization(
    seed: int,
    max_dim: int = 5,
    m: Optional[int] = None,
    max_tries: int = 60,
) -> Realization:
    """Deterministic minimal simple-form realization with rational real spectrum."""
    rng = random.Random(seed)
    n = rng.randint(2, max_dim)
    if m is None:
        m = rng.randint(1, min(3, n))
    for _ in range(max_tries):
        sizes = []
        left = n
        while left:
            k = rng.randint(1, min(3, left))
            sizes.append(k)
            left -= k
        alphas = [Fraction(rng.randint(-2, 2), rng.choice((1, 1, 1, 2))) for _ in sizes]
        a0 = _block_diag([_jordan_block(a, k) for a, k in zip(alphas, sizes)])
        g0 = _block_diag([_sip(k, rng.choice((1, -1))) for k in sizes])
        p = _rand_invertible(rng, n)
        a = p.inverse() @ a0 @ p
        g = p.conj_transpose() @ g0 @ p
        gamma = ConstMatrix([[_rand_qqi(rng, 2) for _ in range(m)] for _ in range(n)])
        r = Realization(gram=g, op=a, gamma=gamma)
        if validate(r):
            continue
        if minimality(r):
            return r
    raise RuntimeError(f"no minimal realization found for seed {seed}")


def random_family(count: int, seed: int, max_dim: int = 5) -> List[Realization]:
    return [random_realization(seed * 1000 + i, max_dim=max_dim) for i in range(count)]
