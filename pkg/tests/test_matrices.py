"""Exact dense linear algebra: RREF, determinants, charpoly, inertia."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from polecancel.field import Poly, QQi, RatFunc
from polecancel.matrices import ConstMatrix, RatMatrix, resolvent

fracs = st.builds(Fraction, st.integers(-6, 6), st.integers(1, 3))
scalars = st.builds(QQi, fracs, fracs)


def _matrices(n):
    return st.lists(st.lists(scalars, min_size=n, max_size=n), min_size=n, max_size=n).map(ConstMatrix)


@given(_matrices(3))
@settings(max_examples=30, deadline=None)
def test_inverse_and_det(m):
    if not m.det():
        assert m.rank() < 3
        return
    inv = m.inverse()
    assert m @ inv == ConstMatrix.identity(3)
    assert inv @ m == ConstMatrix.identity(3)


@given(_matrices(3))
@settings(max_examples=30, deadline=None)
def test_kernel_basis(m):
    basis = m.kernel_basis()
    assert len(basis) == 3 - m.rank()
    for v in basis:
        assert (m @ v).is_zero()


@given(_matrices(3))
@settings(max_examples=25, deadline=None)
def test_charpoly_evaluation(m):
    # det(zI - A) evaluated at a scalar must equal the direct determinant
    p = m.charpoly()
    assert p.degree == 3 and p.leading() == QQi(1)
    for t in (QQi(0), QQi(2), QQi(0, 1)):
        direct = (ConstMatrix.identity(3).scale(t) - m).det()
        assert p.eval(t) == direct


def _hermitian(n, seed_entries):
    grid = [[QQi(0)] * n for _ in range(n)]
    k = 0
    for i in range(n):
        grid[i][i] = QQi(seed_entries[k])
        k += 1
        for j in range(i + 1, n):
            c = QQi(seed_entries[k], seed_entries[k + 1])
            k += 2
            grid[i][j] = c
            grid[j][i] = c.conj()
    return ConstMatrix(grid)


@given(st.lists(fracs, min_size=9, max_size=9))
@settings(max_examples=25, deadline=None)
def test_inertia_against_numpy(entries):
    import numpy as np

    h = _hermitian(3, entries)
    pos, neg, zero = h.inertia()
    assert pos + neg + zero == 3
    eig = np.linalg.eigvalsh(np.array(h.to_complex()))
    # exact vs floating point sign counts; entries are small so 1e-9 separates
    assert pos == int((eig > 1e-9).sum())
    assert neg == int((eig < -1e-9).sum())


def test_inertia_golden():
    flip = ConstMatrix([[0, 1], [1, 0]])
    assert flip.inertia() == (1, 1, 0)
    assert ConstMatrix.identity(3).inertia() == (3, 0, 0)
    assert ConstMatrix([[0, 0], [0, 0]]).inertia() == (0, 0, 2)


def test_ratmatrix_inverse_symbolic():
    a = ConstMatrix([[0, 1], [0, 0]])
    res = resolvent(a)  # (A - z)^{-1}
    expected = RatMatrix([
        [RatFunc(-1, Poly.x()), RatFunc(-1, Poly.x() * Poly.x())],
        [RatFunc(0), RatFunc(-1, Poly.x())],
    ])
    assert res == expected
    ident = (a.to_rat() - RatMatrix.identity(2).scale(RatFunc.z())) @ res
    assert ident == RatMatrix.identity(2)


def test_ratmatrix_taylor_and_order():
    m = RatMatrix([[RatFunc(Poly([0, 0, 1]), Poly([Fraction(-1, 2), 1]))]])
    assert m.min_order_at(QQi(0)) == 2
    t = m.taylor(QQi(0), 3)
    assert t[2].entries[0][0] == QQi(-2)


def test_conj_coeffs_transpose():
    f = RatFunc(Poly([QQi(0, 1), 1]))  # i + z
    m = RatMatrix([[f, RatFunc(0)], [RatFunc(1), f]])
    mt = m.conj_coeffs_transpose()
    assert mt.entries[0][0] == RatFunc(Poly([QQi(0, -1), 1]))
    assert mt.entries[0][1] == RatFunc(1)
