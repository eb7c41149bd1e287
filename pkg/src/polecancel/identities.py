"""Exact structural identities of realizations and the inverse-function
(hat) picture.  Every check returns True only on exact symbolic or exact
rational-point equality; failures mean the input violates the model.

All identities are stated for the full-form Gamma_z; simple-form inputs are
converted with as_full, which leaves Gamma_z and Q unchanged.
"""

from __future__ import annotations

from typing import List, Tuple

from .field import QQi, Poly, RatFunc
from .matrices import ConstMatrix, RatMatrix
from .realization import (
    Realization,
    adjoint_gamma_zbar,
    as_full,
    build_q,
    gamma_z,
    hat_gamma,
    hat_gamma_z,
    hat_q,
    inverse_resolvent,
)

# fixed non-real rational sample pairs (z, w); non-real points are always in
# the resolvent set of the G-selfadjoint operators used here
SAMPLE_PAIRS: Tuple[Tuple[QQi, QQi], ...] = (
    (QQi(0, 1), QQi(0, 2)),
    (QQi(1, 1), QQi(-1, 3)),
    (QQi(2, 5), QQi(0, -1)),
)


def _safe_pairs(r: Realization) -> List[Tuple[QQi, QQi]]:
    out = []
    for z, w in SAMPLE_PAIRS:
        ok = True
        for p in (z, w):
            if not (r.op - ConstMatrix.identity(r.n).scale(p)).det():
                ok = False
        if ok:
            out.append((z, w))
    return out


def check_resolvent_shift(r: Realization) -> bool:
    """Gamma_w = (I + (w - z)(A - w)^{-1}) Gamma_z at exact rational pairs."""
    rf = as_full(r)
    gz = gamma_z(rf)
    ok = True
    for z, w in _safe_pairs(rf):
        res_w = rf.op_resolvent.eval(w)
        lhs = gz.eval(w)
        rhs = (ConstMatrix.identity(rf.n) + res_w.scale(w - z)) @ gz.eval(z)
        ok = ok and lhs == rhs
    return ok


def check_kernel_identity(r: Realization) -> bool:
    """Gamma_w^+ Gamma_z = Gamma_{conj z}^+ Gamma_{conj w} = (Q(z) - Q(conj w))/(z - conj w),
    symbolically in z with w fixed at exact rational points."""
    rf = as_full(r)
    gz = gamma_z(rf)
    agz = adjoint_gamma_zbar(rf)  # z -> Gamma_{conj z}^+
    q = build_q(rf).q  # the constant shift cancels in Q(z) - Q(conj w)
    ok = True
    for _, w in _safe_pairs(rf):
        gw_plus = (gz.eval(w).conj_transpose() @ rf.gram).to_rat()
        lhs = gw_plus @ gz
        wbar = w.conj()
        mid = agz @ gz.eval(wbar).to_rat()
        den = RatFunc(Poly([-wbar, 1]))
        rhs = (q - q.eval(wbar).to_rat()).scale(den.inverse())
        ok = ok and lhs == mid == rhs
    return ok


def check_base_resolvent_difference(r: Realization) -> bool:
    """(A - z0)^{-1} Gamma_z = (Gamma_z - Gamma_{z0}) / (z - z0), symbolic in z."""
    rf = as_full(r)
    gz = gamma_z(rf)
    res0 = (rf.op - ConstMatrix.identity(rf.n).scale(rf.z0)).inverse()
    lhs = res0.to_rat() @ gz
    den = RatFunc(Poly([-rf.z0, 1]))
    rhs = (gz - gz.eval(rf.z0).to_rat()).scale(den.inverse())
    return lhs == rhs


def check_hat_gamma_identity(r: Realization) -> bool:
    """Gamma_hat_z = Gamma_z Q_hat(z), symbolically."""
    rf = as_full(r)
    rhat = inverse_resolvent(rf)
    ghat = hat_gamma(rf)
    zm = RatFunc(Poly([-rf.z0, 1]))
    lhs = (RatMatrix.identity(rf.n) + rhat.scale(zm)) @ ghat.to_rat()
    return lhs == hat_gamma_z(rf)


def check_hat_resolvent_identity(r: Realization) -> bool:
    """(A - z)^{-1} = (A_hat - z)^{-1} + Gamma_hat_z Q(z) Gamma_hat_{conj z}^+."""
    rf = as_full(r)
    rhat = inverse_resolvent(rf)
    ghz = hat_gamma_z(rf)
    zbar = RatFunc(Poly([-rf.z0.conj(), 1]))
    ghat_plus = (hat_gamma(rf).conj_transpose() @ rf.gram).to_rat()
    ghz_bar_plus = ghat_plus @ (RatMatrix.identity(rf.n) + rhat.scale(zbar))
    q = build_q(rf).q
    return rf.op_resolvent == rhat + ghz @ q @ ghz_bar_plus


def check_real_symmetry(r: Realization) -> bool:
    q = build_q(r).q
    return q.conj_coeffs_transpose() == q


def run_identity_suite(r: Realization) -> List[Tuple[str, bool]]:
    """All exact identity checks that need nothing beyond a valid realization."""
    results = [
        ("resolvent_shift", check_resolvent_shift(r)),
        ("kernel_identity", check_kernel_identity(r)),
        ("base_resolvent_difference", check_base_resolvent_difference(r)),
        ("real_symmetry", check_real_symmetry(r)),
    ]
    q = build_q(r).q
    q0 = build_q(as_full(r)).q.eval(as_full(r).z0)
    if not q.det().is_zero() and q0.det():
        results.append(("hat_gamma_identity", check_hat_gamma_identity(r)))
        results.append(("hat_resolvent_identity", check_hat_resolvent_identity(r)))
    return results
