"""Finite-dimensional Pontryagin-space realizations and their Q functions.

A realization is the tuple (G, A, Gamma, z0): an invertible Hermitian Gram
matrix G on C^n, an operator A self-adjoint in the indefinite inner product
[x, y] = (Gx, y), a parameter map Gamma: C^m -> C^n and a base point z0 in the
upper half plane.  Two forms are supported:

  simple:  Q(z) = Gamma^+ (A - z)^{-1} Gamma + S
  full:    Q(z) = Q(z0)^* + (z - conj(z0)) Gamma^+ (I + (z - z0)(A - z)^{-1}) Gamma + S

with Gamma^+ = Gamma^* G the indefinite adjoint and S an optional Hermitian
constant shift.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field, replace
from functools import cached_property
from typing import List, Optional, Tuple

from .field import I, ONE, QQi, Poly, RatFunc, ZERO
from .matrices import ConstMatrix, RatMatrix, SingularMatrixFunction, resolvent


class RealizationError(ValueError):
    pass


class GramNotHermitian(RealizationError):
    pass


class GramSingular(RealizationError):
    pass


class NotSelfAdjoint(RealizationError):
    pass


class BadBasePoint(RealizationError):
    pass


class NotMinimal(RealizationError):
    pass


class BasePointSingular(RealizationError):
    pass


class PoleAtSample(ArithmeticError):
    pass


_FAILURE_CLASSES = {
    "GramNotHermitian": GramNotHermitian,
    "GramSingular": GramSingular,
    "NotSelfAdjoint": NotSelfAdjoint,
    "BadBasePoint": BadBasePoint,
}


@dataclass(frozen=True)
class Realization:
    gram: ConstMatrix
    op: ConstMatrix
    gamma: ConstMatrix
    z0: QQi = I
    form: str = "simple"
    shift: Optional[ConstMatrix] = None
    base_value: Optional[ConstMatrix] = None  # full form: explicit Q(z0)^*

    @property
    def n(self) -> int:
        return self.op.rows

    @property
    def m(self) -> int:
        return self.gamma.cols

    @property
    def shift_or_zero(self) -> ConstMatrix:
        return self.shift if self.shift is not None else ConstMatrix.zero(self.m, self.m)

    @cached_property
    def gamma_plus(self) -> ConstMatrix:
        return self.gamma.conj_transpose() @ self.gram

    @cached_property
    def op_resolvent(self) -> RatMatrix:
        return resolvent(self.op)

    def with_shift(self, s: ConstMatrix) -> "Realization":
        r = replace(self, shift=s)
        # the resolvent does not depend on the shift; share the cached value
        for name in ("op_resolvent", "gamma_plus"):
            if name in self.__dict__:
                r.__dict__[name] = self.__dict__[name]
        return r

    def _memo(self, key: str, fn):
        cache = self.__dict__.setdefault("_derived", {})
        if key not in cache:
            cache[key] = fn()
        return cache[key]


@dataclass(frozen=True)
class QFunction:
    q: RatMatrix
    source: Realization

    def __post_init__(self):
        if self.q.conj_coeffs_transpose() != self.q:
            raise RealizationError("Q violates real symmetry Q(conj z)^* = Q(z)")


@dataclass(frozen=True)
class RelationReport:
    """The reconstructed representing object is a genuine relation."""

    multivalued_dim: int
    tested_points: Tuple[QQi, ...]


def validate(r: Realization) -> List[Tuple[str, str]]:
    """Check the realization invariants; empty list means ok."""
    failures = []
    g, a, gamma = r.gram, r.op, r.gamma
    if not (g.is_square() and a.is_square() and g.rows == a.rows == gamma.rows):
        failures.append(("ShapeMismatch", "G, A square of equal size; Gamma has n rows"))
        return failures
    if not g.is_hermitian():
        failures.append(("GramNotHermitian", "Gram matrix is not Hermitian"))
    elif not g.det():
        failures.append(("GramSingular", "Gram matrix is singular"))
    if g.is_hermitian() and (g @ a) != (a.conj_transpose() @ g):
        failures.append(("NotSelfAdjoint", "G*A != A^* * G"))
    if not (r.z0.im > 0):
        failures.append(("BadBasePoint", "z0 must lie in the open upper half plane"))
    elif not (a - ConstMatrix.identity(r.n).scale(r.z0)).det():
        failures.append(("BadBasePoint", "z0 is an eigenvalue of A"))
    if r.form not in ("simple", "full"):
        failures.append(("BadForm", f"unknown form {r.form!r}"))
    if r.shift is not None and not r.shift.is_hermitian():
        failures.append(("ShiftNotHermitian", "constant shift must be Hermitian"))
    return failures


def check(r: Realization) -> None:
    failures = validate(r)
    if failures:
        code, msg = failures[0]
        raise _FAILURE_CLASSES.get(code, RealizationError)(msg)


def _gamma_z(r: Realization) -> RatMatrix:
    """Gamma_z as an n x m rational matrix.

    simple form: (A - z)^{-1} Gamma; full form: (I + (z - z0)(A - z)^{-1}) Gamma.
    """
    res = r.op_resolvent
    if r.form == "simple":
        return res @ r.gamma.to_rat()
    zm = RatFunc(Poly([-r.z0, 1]))
    n = r.n
    return (RatMatrix.identity(n) + res.scale(zm)) @ r.gamma.to_rat()


def _adjoint_gamma_zbar(r: Realization) -> RatMatrix:
    """(Gamma_{conj z})^+ as an m x n rational matrix in z."""
    res = r.op_resolvent
    gp = r.gamma_plus.to_rat()
    if r.form == "simple":
        return gp @ res
    zm = RatFunc(Poly([-r.z0.conj(), 1]))
    return gp @ (RatMatrix.identity(r.n) + res.scale(zm))


def base_constant(r: Realization) -> ConstMatrix:
    """The constant Q(z0)^* used by the full form.

    When not supplied explicitly, the free Hermitian part is fixed to zero, so
    the constant is the forced skew part -(z0 - conj(z0))/2 * Gamma^+ Gamma.
    """
    if r.base_value is not None:
        return r.base_value
    d = (r.gamma_plus @ r.gamma).scale((r.z0 - r.z0.conj()) / QQi(2))
    return -d


def _build_q(r: Realization) -> QFunction:
    check(r)
    if r.form == "simple":
        q = r.gamma_plus.to_rat() @ r.op_resolvent @ r.gamma.to_rat()
    else:
        zbar = RatFunc(Poly([-r.z0.conj(), 1]))
        q = base_constant(r).to_rat() + (r.gamma_plus.to_rat() @ gamma_z(r)).scale(zbar)
    q = q + r.shift_or_zero.to_rat()
    return QFunction(q, r)


def minimality(r: Realization) -> bool:
    """Full rank of the controllability block [Gamma, A Gamma, ..., A^{n-1} Gamma]."""
    check(r)
    block = r.gamma
    power = r.gamma
    for _ in range(r.n - 1):
        power = r.op @ power
        block = block.hstack(power)
    return block.rank() == r.n


def kappa(r: Realization) -> int:
    """Exact negative index; requires a minimal realization."""
    if not minimality(r):
        raise NotMinimal("kappa is the Gram negative index only for minimal realizations")
    return r.gram.inertia()[1]


def sample_upper_half_points(count: int, seed: int) -> List[complex]:
    rng = random.Random(seed)
    return [complex(rng.uniform(-3, 3), rng.uniform(0.05, 3)) for _ in range(count)]


def kappa_sample(qf: QFunction, points: List[complex], threshold: float = -1e-8) -> int:
    """Numeric cross-check: negative eigenvalues of the sampled Nevanlinna kernel."""
    import numpy as np

    q = qf.q
    m = q.rows
    vals = []
    for p in points:
        dens = [e.den.eval_complex(p) for row in q.entries for e in row]
        if any(abs(d) < 1e-12 for d in dens):
            raise PoleAtSample(f"Q has a pole too close to sample point {p}")
        vals.append(np.array(q.eval_complex(p)))
    big = np.zeros((m * len(points), m * len(points)), dtype=complex)
    for i, zi in enumerate(points):
        for j, zj in enumerate(points):
            block = (vals[i] - vals[j].conj().T) / (zi - zj.conjugate())
            big[i * m : (i + 1) * m, j * m : (j + 1) * m] = block
    # the sampled kernel matrix is Hermitian by construction
    eig = np.linalg.eigvalsh((big + big.conj().T) / 2)
    return int((eig < threshold).sum())


def _as_full(r: Realization) -> Realization:
    """Equivalent full-form realization (same Q, same state space).

    For a simple-form realization Gamma_full = (A - z0)^{-1} Gamma keeps
    Gamma_z unchanged, and the base constant is the exact value Q(z0)^* of the
    shift-free part.
    """
    if r.form == "full":
        return r
    check(r)
    res_z0 = (r.op - ConstMatrix.identity(r.n).scale(r.z0)).inverse()
    gamma_full = res_z0 @ r.gamma
    q_res = r.gamma_plus.to_rat() @ r.op_resolvent @ r.gamma.to_rat()
    base = q_res.eval(r.z0.conj())  # Q(z0)^* = Q(conj z0) by real symmetry
    return Realization(
        gram=r.gram,
        op=r.op,
        gamma=gamma_full,
        z0=r.z0,
        form="full",
        shift=r.shift,
        base_value=base,
    )


def _inverse_resolvent(r: Realization) -> RatMatrix:
    """(A_hat - z)^{-1} = (A - z)^{-1} - Gamma_z Q(z)^{-1} Gamma_{conj z}^+.

    Its finite real poles are exactly the generalized zeros of Q there.
    """
    q = build_q(r).q
    if q.det().is_zero():
        raise SingularMatrixFunction("Q is not regular (det Q vanishes identically)")
    return r.op_resolvent - gamma_z(r) @ q.inverse() @ adjoint_gamma_zbar(r)


def _hat_q(r: Realization) -> RatMatrix:
    q = build_q(r).q
    if q.det().is_zero():
        raise SingularMatrixFunction("Q is not regular (det Q vanishes identically)")
    return -q.inverse()


def hat_gamma(r: Realization) -> ConstMatrix:
    """Gamma_hat = -Gamma Q(z0)^{-1} in the full-form picture."""
    rf = as_full(r)
    q0 = build_q(rf).q.eval(rf.z0)
    if not q0.det():
        raise BasePointSingular("Q(z0) is singular; choose a different base point")
    return -(rf.gamma @ q0.inverse())


def hat_gamma_z(r: Realization) -> RatMatrix:
    """Gamma_hat_z = Gamma_z * Q_hat(z)."""
    return gamma_z(r) @ hat_q(r)


def hat_realization(r: Realization, max_attempts: int = 8):
    """Package the inverse function as a realization, or report a relation.

    Picks z1 = k*i with R_hat(z1) invertible and sets A_hat = z1 I + R_hat(z1)^{-1}.
    When R_hat is rank deficient at every tested z1, A_hat is a genuine
    multi-valued relation and a RelationReport is returned instead.
    """
    rf = as_full(r)
    rhat = inverse_resolvent(rf)
    ghat = hat_gamma(rf)
    q = build_q(rf).q
    n = r.n
    tested = []
    best_rank = 0
    for k in range(1, max_attempts + 1):
        z1 = QQi(0, k)
        if z1 == rf.z0.conj():
            continue
        try:
            rz1 = rhat.eval(z1)
        except Exception:
            continue
        tested.append(z1)
        rank = rz1.rank()
        best_rank = max(best_rank, rank)
        if rank == n:
            ahat = ConstMatrix.identity(n).scale(z1) + rz1.inverse()
            base = -(q.eval(rf.z0.conj()).inverse())  # Q_hat(z0)^* = -Q(conj z0)^{-1}
            return Realization(
                gram=rf.gram,
                op=ahat,
                gamma=ghat,
                z0=rf.z0,
                form="full",
                base_value=base,
            )
    return RelationReport(multivalued_dim=n - best_rank, tested_points=tuple(tested))


# cached fronts: these derived objects are pure functions of the realization
# and expensive to build, so they are memoized on the instance


def gamma_z(r: Realization) -> RatMatrix:
    return r._memo("gamma_z", lambda: _gamma_z(r))


def adjoint_gamma_zbar(r: Realization) -> RatMatrix:
    return r._memo("adjoint_gamma_zbar", lambda: _adjoint_gamma_zbar(r))


def build_q(r: Realization) -> QFunction:
    return r._memo("build_q", lambda: _build_q(r))


def inverse_resolvent(r: Realization) -> RatMatrix:
    return r._memo("inverse_resolvent", lambda: _inverse_resolvent(r))


def as_full(r: Realization) -> Realization:
    return r._memo("as_full", lambda: _as_full(r))


def hat_q(r: Realization) -> RatMatrix:
    return r._memo("hat_q", lambda: _hat_q(r))


def choose_base_point(gram, op, gamma, form="simple", shift=None, max_attempts=32) -> QQi:
    """Default z0 = i, scanned upward until z0 is valid and Q(z0) invertible."""
    for k in range(1, max_attempts + 1):
        z0 = QQi(0, k)
        r = Realization(gram=gram, op=op, gamma=gamma, z0=z0, form=form, shift=shift)
        if validate(r):
            continue
        q = build_q(r).q
        if q.det().is_zero():
            return z0  # no base point can make a non-regular Q invertible
        if q.eval(z0).det():
            return z0
    raise BadBasePoint("no valid base point found in the bounded scan")
