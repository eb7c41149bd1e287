"""Dense exact matrices over Gaussian rationals and over the rational-function field.

ConstMatrix holds QQi entries (Gram matrices, operators, chain vectors);
RatMatrix holds reduced RatFunc entries (Q(z), resolvents, Gamma_z).
All elimination uses deterministic first-nonzero pivoting in row-major order.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .field import ONE, ORDER_INF, QQi, Poly, RatFunc, ZERO


class ShapeMismatch(ValueError):
    pass


class SingularMatrixFunction(ArithmeticError):
    pass


class NotHermitian(ValueError):
    pass


def _as_grid(entries, coerce):
    rows = [list(map(coerce, row)) for row in entries]
    if rows and any(len(r) != len(rows[0]) for r in rows):
        raise ShapeMismatch("ragged matrix")
    return rows


class _MatrixBase:
    """Shared dense-matrix machinery; subclasses fix the entry field."""

    _coerce = staticmethod(lambda x: x)
    _zero = None
    _one = None

    def __init__(self, entries):
        self.entries = _as_grid(entries, type(self)._coerce)
        self.rows = len(self.entries)
        self.cols = len(self.entries[0]) if self.entries else 0

    def __getitem__(self, key):
        i, j = key
        return self.entries[i][j]

    def __eq__(self, other):
        return (
            type(self) is type(other)
            and self.rows == other.rows
            and self.cols == other.cols
            and self.entries == other.entries
        )

    def __add__(self, other):
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ShapeMismatch("matrix addition shape mismatch")
        return type(self)(
            [[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.entries, other.entries)]
        )

    def __sub__(self, other):
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ShapeMismatch("matrix subtraction shape mismatch")
        return type(self)(
            [[a - b for a, b in zip(r1, r2)] for r1, r2 in zip(self.entries, other.entries)]
        )

    def __neg__(self):
        return type(self)([[-a for a in row] for row in self.entries])

    def __matmul__(self, other):
        if self.cols != other.rows:
            raise ShapeMismatch("matrix product shape mismatch")
        out = []
        for i in range(self.rows):
            row = []
            for j in range(other.cols):
                acc = type(self)._zero
                for k in range(self.cols):
                    acc = acc + self.entries[i][k] * other.entries[k][j]
                row.append(acc)
            out.append(row)
        return type(self)(out)

    def scale(self, c):
        c = type(self)._coerce(c)
        return type(self)([[a * c for a in row] for row in self.entries])

    def transpose(self):
        return type(self)([[self.entries[i][j] for i in range(self.rows)] for j in range(self.cols)])

    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_zero(self) -> bool:
        return all(not a for row in self.entries for a in row)

    @classmethod
    def identity(cls, n: int):
        return cls([[cls._one if i == j else cls._zero for j in range(n)] for i in range(n)])

    @classmethod
    def zero(cls, rows: int, cols: int):
        return cls([[cls._zero] * cols for _ in range(rows)])

    def column(self, j: int):
        return type(self)([[self.entries[i][j]] for i in range(self.rows)])

    def hstack(self, other):
        if self.rows != other.rows:
            raise ShapeMismatch("hstack row mismatch")
        return type(self)([r1 + r2 for r1, r2 in zip(self.entries, other.entries)])

    # -- elimination -------------------------------------------------------

    def _rref(self):
        """Reduced row echelon form; returns (grid, pivot column list)."""
        grid = [row[:] for row in self.entries]
        pivots = []
        r = 0
        for c in range(self.cols):
            pr = next((i for i in range(r, self.rows) if grid[i][c]), None)
            if pr is None:
                continue
            grid[r], grid[pr] = grid[pr], grid[r]
            inv = _invert_entry(grid[r][c])
            grid[r] = [a * inv for a in grid[r]]
            for i in range(self.rows):
                if i != r and grid[i][c]:
                    f = grid[i][c]
                    grid[i] = [a - f * b for a, b in zip(grid[i], grid[r])]
            pivots.append(c)
            r += 1
            if r == self.rows:
                break
        return grid, pivots

    def rank(self) -> int:
        return len(self._rref()[1])

    def det(self):
        if not self.is_square():
            raise ShapeMismatch("determinant of a non-square matrix")
        grid = [row[:] for row in self.entries]
        n = self.rows
        det = type(self)._one
        for c in range(n):
            pr = next((i for i in range(c, n) if grid[i][c]), None)
            if pr is None:
                return type(self)._zero
            if pr != c:
                grid[c], grid[pr] = grid[pr], grid[c]
                det = -det
            det = det * grid[c][c]
            inv = _invert_entry(grid[c][c])
            for i in range(c + 1, n):
                if grid[i][c]:
                    f = grid[i][c] * inv
                    grid[i] = [a - f * b for a, b in zip(grid[i], grid[c])]
        return det

    def inverse(self):
        if not self.is_square():
            raise ShapeMismatch("inverse of a non-square matrix")
        n = self.rows
        aug = self.hstack(type(self).identity(n))
        grid, pivots = aug._rref()
        if pivots != list(range(n)):
            raise SingularMatrixFunction("matrix is singular")
        return type(self)([row[n:] for row in grid])

    def kernel_basis(self):
        """Deterministic reduced-echelon kernel basis, as a list of column matrices."""
        grid, pivots = self._rref()
        free = [c for c in range(self.cols) if c not in pivots]
        basis = []
        for f in free:
            v = [type(self)._zero] * self.cols
            v[f] = type(self)._one
            for r, p in enumerate(pivots):
                v[p] = -grid[r][f]
            basis.append(type(self)([[x] for x in v]))
        return basis


def _invert_entry(x):
    if isinstance(x, QQi):
        return x.inverse()
    return x.inverse()


class ConstMatrix(_MatrixBase):
    _coerce = staticmethod(QQi.coerce)
    _zero = ZERO
    _one = ONE

    def conj_transpose(self) -> "ConstMatrix":
        return ConstMatrix(
            [[self.entries[i][j].conj() for i in range(self.rows)] for j in range(self.cols)]
        )

    def is_hermitian(self) -> bool:
        return self.is_square() and self == self.conj_transpose()

    def charpoly(self) -> Poly:
        """Monic characteristic polynomial det(zI - A), via Faddeev-LeVerrier."""
        if not self.is_square():
            raise ShapeMismatch("characteristic polynomial of a non-square matrix")
        n = self.rows
        coeffs = [ONE]  # highest first during the recursion
        m = ConstMatrix.identity(n)
        for k in range(1, n + 1):
            m = self @ m
            ck = -sum((m.entries[i][i] for i in range(n)), ZERO) / QQi(k)
            coeffs.append(ck)
            if k < n:
                m = m + ConstMatrix.identity(n).scale(ck)
        return Poly(list(reversed(coeffs)))

    def inertia(self):
        """Exact (n_plus, n_minus, n_zero) of a Hermitian matrix.

        Computed by Sturm root counting on the (real rational) characteristic
        polynomial, with multiplicities restored from a squarefree split.
        """
        if not self.is_hermitian():
            raise NotHermitian("inertia requires a Hermitian matrix")
        p = self.charpoly()
        coeffs = []
        for c in p.coeffs:
            if c.im:
                raise NotHermitian("characteristic polynomial is not real")
            coeffs.append(c.re)
        n_zero = next(i for i, c in enumerate(coeffs) if c)
        coeffs = coeffs[n_zero:]
        n_plus = n_minus = 0
        for factor, mult in _squarefree_real(coeffs):
            n_plus += mult * _sturm_count_positive(factor)
            n_minus += mult * _sturm_count_negative(factor)
        assert n_plus + n_minus + n_zero == self.rows
        return (n_plus, n_minus, n_zero)

    def to_rat(self) -> "RatMatrix":
        return RatMatrix([[RatFunc(Poly([e])) for e in row] for row in self.entries])

    def to_complex(self):
        return [[e.to_complex() for e in row] for row in self.entries]

    def __repr__(self):
        return "ConstMatrix(%s)" % [[str(e) for e in row] for row in self.entries]


# ---------------------------------------------------------------------------
# Sturm machinery on real rational coefficient lists (lowest degree first)


def _poly_trim(p):
    while p and not p[-1]:
        p.pop()
    return p


def _poly_rem(a, b):
    a = a[:]
    while len(a) >= len(b):
        c = a[-1] / b[-1]
        for j in range(len(b)):
            a[len(a) - len(b) + j] -= c * b[j]
        a.pop()
        _poly_trim(a)
    return a


def _squarefree_real(coeffs):
    """Yun squarefree decomposition; yields (factor_coeffs, multiplicity)."""
    p = _poly_trim([Fraction(c) for c in coeffs])
    if len(p) <= 1:
        return
    dp = _poly_trim([k * c for k, c in enumerate(p)][1:])
    g = _poly_gcd_real(p, dp)
    w = _poly_div_exact(p, g)
    y = _poly_div_exact(dp, g)
    i = 1
    while len(w) > 1:
        z = _poly_sub(y, _poly_deriv(w))
        g1 = _poly_gcd_real(w, z)
        if len(g1) > 1:
            yield (g1, i)
        w = _poly_div_exact(w, g1)
        y = _poly_div_exact(z, g1)
        i += 1


def _poly_deriv(p):
    return _poly_trim([k * c for k, c in enumerate(p)][1:])


def _poly_sub(a, b):
    out = [Fraction(0)] * max(len(a), len(b))
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] -= c
    return _poly_trim(out)


def _poly_gcd_real(a, b):
    a, b = _poly_trim(a[:]), _poly_trim(b[:])
    while b:
        a, b = b, _poly_rem(a, b)
    if a:
        lead = a[-1]
        a = [c / lead for c in a]
    return a


def _poly_div_exact(a, b):
    a = a[:]
    quo = [Fraction(0)] * max(0, len(a) - len(b) + 1)
    while len(a) >= len(b):
        c = a[-1] / b[-1]
        quo[len(a) - len(b)] = c
        for j in range(len(b)):
            a[len(a) - len(b) + j] -= c * b[j]
        a.pop()
        _poly_trim(a)
    return _poly_trim(quo)


def _sturm_chain(p):
    chain = [p, _poly_deriv(p)]
    while len(chain[-1]) > 0:
        r = _poly_rem(chain[-2], chain[-1])
        if not r:
            break
        chain.append([-c for c in r])
    return [c for c in chain if c]


def _sign_at_zero(p):
    return (p[0] > 0) - (p[0] < 0)


def _sign_at_pinf(p):
    lead = p[-1]
    return (lead > 0) - (lead < 0)


def _sign_at_minf(p):
    s = _sign_at_pinf(p)
    return s if (len(p) - 1) % 2 == 0 else -s


def _variations(signs):
    signs = [s for s in signs if s]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def _sturm_count_positive(p):
    chain = _sturm_chain(p)
    return _variations([_sign_at_zero(q) for q in chain]) - _variations(
        [_sign_at_pinf(q) for q in chain]
    )


def _sturm_count_negative(p):
    chain = _sturm_chain(p)
    return _variations([_sign_at_minf(q) for q in chain]) - _variations(
        [_sign_at_zero(q) for q in chain]
    )


# ---------------------------------------------------------------------------


class RatMatrix(_MatrixBase):
    _coerce = staticmethod(RatFunc.coerce)
    _zero = RatFunc(0)
    _one = RatFunc(1)

    @staticmethod
    def from_const(m: ConstMatrix) -> "RatMatrix":
        return m.to_rat()

    def inverse(self) -> "RatMatrix":
        """Exact inverse over the rational-function field.

        Adjugate for n <= 3 (keeps entry degrees transparent), Gauss-Jordan
        elimination with deterministic pivoting beyond that.
        """
        if not self.is_square():
            raise ShapeMismatch("inverse of a non-square matrix")
        n = self.rows
        if n <= 3:
            d = self.det()
            if d.is_zero():
                raise SingularMatrixFunction("determinant vanishes identically")
            dinv = d.inverse()
            if n == 1:
                return RatMatrix([[dinv]])
            adj = []
            for i in range(n):
                row = []
                for j in range(n):
                    minor = RatMatrix(
                        [
                            [self.entries[r][c] for c in range(n) if c != i]
                            for r in range(n)
                            if r != j
                        ]
                    )
                    sign = RatFunc(1) if (i + j) % 2 == 0 else RatFunc(-1)
                    row.append(sign * minor.det() * dinv)
                adj.append(row)
            return RatMatrix(adj)
        return super().inverse()

    def eval(self, p) -> ConstMatrix:
        return ConstMatrix([[e.eval(p) for e in row] for row in self.entries])

    def eval_complex(self, p: complex):
        return [[e.eval_complex(p) for e in row] for row in self.entries]

    def taylor(self, alpha, k: int):
        """Entrywise Taylor coefficient lists; k ConstMatrix terms."""
        grids = [[[None] * self.cols for _ in range(self.rows)] for _ in range(k)]
        for i in range(self.rows):
            for j in range(self.cols):
                cs = self.entries[i][j].taylor(alpha, k)
                for t in range(k):
                    grids[t][i][j] = cs[t]
        return [ConstMatrix(g) for g in grids]

    def min_order_at(self, alpha):
        """Minimum entrywise order at alpha; negative certifies a pole."""
        return min((e.order_at(alpha) for row in self.entries for e in row), default=ORDER_INF)

    def conj_coeffs_transpose(self) -> "RatMatrix":
        """M^#(z)^T: coefficientwise conjugation plus transpose.

        Equals z -> M(z_bar)^* as an identity of rational matrices.
        """
        return RatMatrix(
            [
                [self.entries[i][j].conj_coeffs() for i in range(self.rows)]
                for j in range(self.cols)
            ]
        )

    def __repr__(self):
        return "RatMatrix(%s)" % [[str(e) for e in row] for row in self.entries]


def resolvent(a: ConstMatrix, negate_shift=True) -> RatMatrix:
    """(A - z)^{-1} as an exact rational matrix."""
    n = a.rows
    z = RatFunc.z()
    m = a.to_rat() - RatMatrix.identity(n).scale(z)
    return m.inverse()
