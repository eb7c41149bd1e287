"""Exact eigenstructure of the state operator: rational eigenvalues, Jordan
chains with deterministic canonical bases, and generalized pole/zero verdicts.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from .field import ONE, QQi, ZERO, rational_real_roots
from .matrices import ConstMatrix, RatMatrix, SingularMatrixFunction
from .realization import Realization, build_q, check, inverse_resolvent


class NotAnEigenvalue(ValueError):
    pass


class ChainBroken(ValueError):
    def __init__(self, index: int, message: str = ""):
        self.index = index
        super().__init__(message or f"chain identity fails at index {index}")


@dataclass(frozen=True)
class JordanChain:
    alpha: Fraction
    vectors: Tuple[ConstMatrix, ...]  # x_0 .. x_{l-1}, each n x 1

    @property
    def length(self) -> int:
        return len(self.vectors)

    def prefix(self, ell: int) -> "JordanChain":
        return JordanChain(self.alpha, self.vectors[:ell])


@dataclass(frozen=True)
class RationalSpectrum:
    eigenvalues: Tuple[Tuple[Fraction, int], ...]  # (value, algebraic multiplicity)
    residual_degree: int  # degree of the non-rational characteristic factor


@dataclass(frozen=True)
class PoleZeroVerdict:
    is_generalized_pole: bool
    is_generalized_zero: Optional[bool]  # None when Q is not regular
    pole_partial_multiplicities: Tuple[int, ...]
    zero_resolvent_pole_order: int


def eigenvalues_rational(a: ConstMatrix) -> RationalSpectrum:
    """Rational real eigenvalues of A with algebraic multiplicities."""
    p = a.charpoly()
    roots = rational_real_roots(p)
    covered = sum(m for _, m in roots)
    return RationalSpectrum(tuple(roots), p.degree - covered)


def _span_matrix(vectors: List[ConstMatrix], n: int) -> ConstMatrix:
    if not vectors:
        return ConstMatrix.zero(0, n)
    return ConstMatrix([[v.entries[j][0] for j in range(n)] for v in vectors])


def _in_span(rows: ConstMatrix, v: ConstMatrix) -> bool:
    if rows.rows == 0:
        return v.is_zero()
    n = rows.cols
    stacked = ConstMatrix(rows.entries + [[v.entries[j][0] for j in range(n)]])
    return stacked.rank() == rows.rank()


def jordan_chains(a: ConstMatrix, alpha) -> List[JordanChain]:
    """Canonical maximal set of Jordan chains of A at the eigenvalue alpha.

    Chains are read off the kernel filtration ker(N) in ker(N^2) in ..., with
    tops chosen as leftmost-pivot echelon complements at every stratum, so the
    output is deterministic.  Chain lengths come out in descending order.
    """
    alpha = Fraction(alpha)
    n = a.rows
    nmat = a - ConstMatrix.identity(n).scale(QQi(alpha))
    kernels = []
    power = ConstMatrix.identity(n)
    prev_dim = 0
    for _ in range(n):
        power = power @ nmat
        basis = power.kernel_basis()
        if len(basis) == prev_dim:
            break
        kernels.append(basis)
        prev_dim = len(basis)
    if not kernels:
        raise NotAnEigenvalue(f"{alpha} is not an eigenvalue")
    height = len(kernels)
    tops: List[Tuple[int, ConstMatrix]] = []  # (height, top vector)
    carry: List[ConstMatrix] = []
    for s in range(height, 0, -1):
        lower = kernels[s - 2] if s >= 2 else []
        span_rows = [
            [v.entries[j][0] for j in range(n)] for v in lower + carry
        ]
        chosen = []
        for cand in kernels[s - 1]:
            rows = ConstMatrix(span_rows) if span_rows else ConstMatrix.zero(0, n)
            if not _in_span(rows, cand):
                chosen.append(cand)
                span_rows.append([cand.entries[j][0] for j in range(n)])
        for v in chosen:
            tops.append((s, v))
        carry = [nmat @ v for v in carry + chosen]
    chains = []
    for s, top in tops:
        vecs = [top]
        for _ in range(s - 1):
            vecs.append(nmat @ vecs[-1])
        vecs.reverse()  # x_0 first
        chains.append(JordanChain(alpha, tuple(vecs)))
    chains.sort(key=lambda c: -c.length)
    return chains


def chain_validate(a: ConstMatrix, chain: JordanChain) -> bool:
    """Check (A - alpha) x_0 = 0, x_0 != 0 and (A - alpha) x_j = x_{j-1} exactly."""
    n = a.rows
    nmat = a - ConstMatrix.identity(n).scale(QQi(chain.alpha))
    if not chain.vectors:
        raise ChainBroken(0, "empty chain")
    x0 = chain.vectors[0]
    if x0.is_zero() or not (nmat @ x0).is_zero():
        raise ChainBroken(0)
    for j in range(1, chain.length):
        if (nmat @ chain.vectors[j]) != chain.vectors[j - 1]:
            raise ChainBroken(j)
    return True


def _column_space_rows(m: ConstMatrix) -> List[List[QQi]]:
    """Basis of the column space of m, as row vectors (RREF of the transpose)."""
    grid, pivots = m.transpose()._rref()
    return [grid[i] for i in range(len(pivots))]


def chain_freedom(a: ConstMatrix, chain: JordanChain) -> Dict[int, List[ConstMatrix]]:
    """Admissible standalone perturbations of each x_j, j >= 1.

    Shifting x_j by v keeps a valid chain of the same length exactly when
    v in ker(A - alpha) and, for inner indices, v is reachable so that the
    elements above can be adjusted: v in ran((A - alpha)^{l-1-j}).
    """
    chain_validate(a, chain)
    n = a.rows
    nmat = a - ConstMatrix.identity(n).scale(QQi(chain.alpha))
    kernel = nmat.kernel_basis()
    out: Dict[int, List[ConstMatrix]] = {}
    for j in range(1, chain.length):
        k = chain.length - 1 - j
        if k == 0:
            out[j] = kernel
            continue
        power = ConstMatrix.identity(n)
        for _ in range(k):
            power = power @ nmat
        # intersect span(kernel) with the column space of power
        if not kernel:
            out[j] = []
            continue
        kmat = ConstMatrix([[v.entries[i][0] for v in kernel] for i in range(n)])
        rows = _column_space_rows(power)
        ran = ConstMatrix([[r[i] for r in rows] for i in range(n)]) if rows else None
        if ran is None:
            out[j] = []
            continue
        combined = kmat.hstack(ran.scale(QQi(-1)))
        basis = []
        for coeffs in combined.kernel_basis():
            v = ConstMatrix.zero(n, 1)
            for t in range(len(kernel)):
                v = v + kernel[t].scale(coeffs.entries[t][0])
            if not v.is_zero():
                basis.append(v)
        out[j] = basis
    return out


def classify_point(r: Realization, alpha) -> PoleZeroVerdict:
    """Generalized pole/zero verdict at a rational real alpha."""
    check(r)
    alpha = Fraction(alpha)
    spectrum = eigenvalues_rational(r.op)
    is_pole = any(v == alpha for v, _ in spectrum.eigenvalues)
    partial = ()
    if is_pole:
        partial = tuple(c.length for c in jordan_chains(r.op, alpha))
    q = build_q(r).q
    if q.det().is_zero():
        return PoleZeroVerdict(is_pole, None, partial, 0)
    rhat = inverse_resolvent(r)
    order = rhat.min_order_at(QQi(alpha))
    is_zero = order < 0
    return PoleZeroVerdict(is_pole, is_zero, partial, int(-order) if is_zero else 0)


def generalized_zeros_rational(r: Realization):
    """Rational real generalized zeros of Q: rational real poles of R_hat."""
    rhat = inverse_resolvent(r)
    candidates = set()
    for row in rhat.entries:
        for e in row:
            if e.den.degree > 0:
                for root, _ in rational_real_roots(e.den):
                    candidates.add(root)
    out = []
    for root in sorted(candidates):
        order = rhat.min_order_at(QQi(root))
        if order < 0:
            out.append((root, int(-order)))
    return out
