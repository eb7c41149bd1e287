"""Pole cancellation functions: construction from Jordan chains, exact
verification of the defining conditions, chain and Gram recovery, and the
mirrored root-function machinery at generalized zeros.

Weak limits are implemented as Taylor evaluations: in finite dimension weak
and strong limits coincide, and non-tangential limits of rational functions
regular at the point are plain evaluations (documented model assumption).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple, Union

from .field import (
    BiPoly,
    BiRatFunc,
    ORDER_INF,
    QQi,
    Poly,
    RatFunc,
    SingularAtPoint,
    ZERO,
    divide_by_z_minus_u,
    nevanlinna_kernel_entry,
)
from .matrices import ConstMatrix, RatMatrix, SingularMatrixFunction
from .realization import (
    QFunction,
    Realization,
    adjoint_gamma_zbar,
    as_full,
    build_q,
    gamma_z,
    hat_gamma,
    inverse_resolvent,
    hat_q,
)
from .spectral import JordanChain, chain_validate, classify_point, jordan_chains

PASS = "pass"
FAIL = "fail"
INCONCLUSIVE = "inconclusive"


class AlphaIsGeneralizedZero(ArithmeticError):
    pass


class BetaIsGeneralizedPole(ArithmeticError):
    pass


class SearchExhausted(RuntimeError):
    pass


class PoleInChainRecovery(ArithmeticError):
    pass


@dataclass(frozen=True)
class PcfCandidate:
    eta: Tuple[RatFunc, ...]
    alpha: Fraction
    provenance: str  # "constructed_eq_eta" | "constructed_regularized" | "user_supplied"
    chain: Optional[JordanChain] = None
    shift: Optional[ConstMatrix] = None  # S of the regularized construction
    poly_part: Optional[Tuple[RatFunc, ...]] = None  # p(z) with eta = (Q+S)^{-1} p


@dataclass(frozen=True)
class PcfReport:
    order: int
    strong: bool
    vanish: Tuple[str, ...]  # (D_j); j = 0 is (A)
    limits_exist: Tuple[str, ...]  # (E_j); j = 0 is (B)
    kernel_bounded: Tuple[str, ...]  # (F_j); j = 0 is (C)
    kernel_limits: Tuple[str, ...]  # (F_s,j); j = 0 is (C_s)
    eta_derivative_limits: Tuple[ConstMatrix, ...]  # the vectors eta_j

    @property
    def condition_a(self):
        return self.vanish[0]

    @property
    def condition_b(self):
        return self.limits_exist[0]

    @property
    def condition_c(self):
        return self.kernel_bounded[0]

    @property
    def condition_c_strong(self):
        return self.kernel_limits[0]


@dataclass(frozen=True)
class RootCandidate:
    xi: Tuple[RatFunc, ...]
    beta: Fraction
    provenance: str
    hat_chain: Optional[JordanChain] = None


@dataclass(frozen=True)
class RootReport:
    order: int
    strong: bool
    limits_exist: Tuple[str, ...]  # (K_j)
    vanish: Tuple[str, ...]  # (L_j)
    kernel_bounded: Tuple[str, ...]  # (M_j)
    kernel_limits: Tuple[str, ...]  # (M_s,j)
    xi_derivative_limits: Tuple[ConstMatrix, ...]


def _as_matrix(q: Union[QFunction, RatMatrix]) -> RatMatrix:
    return q.q if isinstance(q, QFunction) else q


def _vec_entries(m: RatMatrix) -> List[RatFunc]:
    return [row[0] for row in m.entries]


def _chain_poly(chain: JordanChain) -> RatMatrix:
    """x(z) = x_0 + (z - alpha) x_1 + ... as an n x 1 rational matrix."""
    alpha = QQi(chain.alpha)
    acc = None
    fac = RatFunc(1)
    lin = RatFunc(Poly([-alpha, 1]))
    for v in chain.vectors:
        term = v.to_rat().scale(fac)
        acc = term if acc is None else acc + term
        fac = fac * lin
    return acc


def kernel_quadratic(q: RatMatrix, eta_z: Sequence[RatFunc], eta_u: Sequence[RatFunc]) -> BiRatFunc:
    """The two-variable pairing eta_u^#(u)^T N(z,u) eta_z(z) as a reduced
    bivariate rational function.

    N(z,u) = (Q(z) - Q(u)) / (z - u) is the Nevanlinna kernel with u standing
    for the conjugated second variable (using Q(w)^* = Q(conj w)).  Reference
    implementation; PairKernel below evaluates the same pairing much faster.
    """
    m = q.rows
    acc = BiRatFunc(0)
    left = [BiRatFunc.from_ratfunc_in_u(f.conj_coeffs()) for f in eta_u]
    right = [BiRatFunc.coerce(f) for f in eta_z]
    for i in range(m):
        if eta_u[i].is_zero():
            continue
        for j in range(m):
            if eta_z[j].is_zero() or q.entries[i][j].is_zero():
                continue
            nij = nevanlinna_kernel_entry(q.entries[i][j])
            acc = acc + left[i] * nij * right[j]
    return acc


def _poly_lcm(polys: Sequence[Poly]) -> Poly:
    acc = Poly([1])
    for p in polys:
        acc = (acc * p) // acc.gcd(p)
    return acc.monic()


def _series_inverse(p: Poly, k: int) -> List[QQi]:
    """Power series coefficients of 1/p up to order k; requires p(0) != 0."""
    c0 = p.coeffs[0].inverse()
    out = [c0]
    for i in range(1, k + 1):
        acc = ZERO
        for t in range(1, i + 1):
            if t <= p.degree:
                acc = acc + p.coeffs[t] * out[i - t]
        out.append(-acc * c0)
    return out


class PairKernel:
    """The pairing eta_u^#(u)^T N(z,u) eta_z(z) in separated form.

    Real symmetry turns the pairing into
        (eta_u^#(u)^T g(z) - h^#(u)^T eta_z(z)) / (z - u),
    g = Q eta_z, h = Q eta_u, so the denominator splits as D_z(z) D_u(u) and
    every irreducible factor is univariate.  Regularity and Taylor data at a
    diagonal point (alpha, alpha) then need univariate arithmetic only.
    """

    def __init__(self, q: RatMatrix, eta_z: Sequence[RatFunc], eta_u: Sequence[RatFunc]):
        ez = RatMatrix([[f] for f in eta_z])
        eu = RatMatrix([[f] for f in eta_u])
        g = _vec_entries(q @ ez)
        h = _vec_entries(q @ eu)
        pairs = [(f.conj_coeffs(), gi) for f, gi in zip(eta_u, g)]
        pairs += [(-(hi.conj_coeffs()), fi) for hi, fi in zip(h, eta_z)]
        dz = _poly_lcm([b.den for _, b in pairs])
        du = _poly_lcm([a.den for a, _ in pairs])
        num = BiPoly(0)
        for a, b in pairs:
            if a.is_zero() or b.is_zero():
                continue
            zu = BiPoly.from_u_poly(a.num * (du // a.den))
            zz = BiPoly.from_z_poly(b.num * (dz // b.den))
            num = num + zu * zz
        # the pairing vanishes on z = u, so the numerator splits off (z - u)
        self.num = divide_by_z_minus_u(num) if not num.is_zero() else num
        self.den_z = dz
        self.den_u = du

    def _cancellation(self, alpha: QQi):
        mz = self.den_z.mult_at(alpha)
        mu = self.den_u.mult_at(alpha)
        if self.num.is_zero():
            return None, mz, mu, 0, 0
        s = self.num.shift(alpha, alpha)
        ez = min(p for (p, _q) in s.terms)
        eu = min(_q for (_p, _q) in s.terms)
        return s, mz, mu, ez, eu

    def regular_at(self, alpha: QQi) -> bool:
        s, mz, mu, ez, eu = self._cancellation(alpha)
        return s is None or (ez >= mz and eu >= mu)

    def taylor_coeff(self, alpha: QQi, i: int, j: int) -> QQi:
        s, mz, mu, ez, eu = self._cancellation(alpha)
        if s is None:
            return ZERO
        if ez < mz or eu < mu:
            raise SingularAtPoint(f"kernel pairing singular at ({alpha}, {alpha})")
        dz = self.den_z.shift(alpha)
        du = self.den_u.shift(alpha)
        for _ in range(mz):
            dz = dz // Poly.x()
        for _ in range(mu):
            du = du // Poly.x()
        inv_z = _series_inverse(dz, i)
        inv_u = _series_inverse(du, j)
        acc = ZERO
        for (p, q), c in s.terms.items():
            p -= mz
            q -= mu
            if 0 <= p <= i and 0 <= q <= j:
                acc = acc + c * inv_z[i - p] * inv_u[j - q]
        return acc


def verify_pcf(
    q: Union[QFunction, RatMatrix],
    cand: PcfCandidate,
    order_cap: Optional[int] = None,
) -> PcfReport:
    """Check conditions (A)-(F_s) exactly and detect the maximal order.

    The order search is capped at the state dimension when q carries its
    realization, since order-l candidates map to length-l Jordan chains.
    """
    qm = _as_matrix(q)
    if order_cap is None:
        order_cap = q.source.n if isinstance(q, QFunction) else qm.rows + max(
            e.den.degree for row in qm.entries for e in row
        )
    alpha = QQi(cand.alpha)
    cap = max(1, order_cap)

    orders = [f.order_at(alpha) for f in cand.eta]
    min_order = min(orders) if orders else ORDER_INF
    vanish = tuple(PASS if min_order >= j + 1 else FAIL for j in range(cap))

    qeta = qm @ RatMatrix([[f] for f in cand.eta])
    qeta_entries = _vec_entries(qeta)
    regular = all(f.order_at(alpha) >= 0 for f in qeta_entries)
    eta_limits: List[ConstMatrix] = []
    eta0_nonzero = False
    if regular:
        coeffs = [f.taylor(alpha, cap) for f in qeta_entries]
        fact = 1
        for j in range(cap):
            if j:
                fact *= j
            eta_limits.append(ConstMatrix([[coeffs[i][j] * QQi(fact)] for i in range(len(coeffs))]))
        eta0_nonzero = not eta_limits[0].is_zero()
    limits_exist = tuple(PASS if regular and eta0_nonzero else FAIL for _ in range(cap))

    kernel = PairKernel(qm, cand.eta, cand.eta)
    kernel_regular = kernel.regular_at(alpha)
    kernel_limits = tuple(PASS if kernel_regular else FAIL for _ in range(cap))
    kernel_bounded = tuple(PASS if kernel_regular else INCONCLUSIVE for _ in range(cap))

    order = 0
    for j in range(cap):
        if vanish[j] == PASS and limits_exist[j] == PASS and kernel_bounded[j] == PASS:
            order = j + 1
        else:
            break
    strong = order > 0 and all(kernel_limits[j] == PASS for j in range(order))
    return PcfReport(
        order=order,
        strong=strong,
        vanish=vanish,
        limits_exist=limits_exist,
        kernel_bounded=kernel_bounded,
        kernel_limits=kernel_limits,
        eta_derivative_limits=tuple(eta_limits),
    )


def construct_pcf(r: Realization, chain: JordanChain) -> PcfCandidate:
    """eta(z) = Q(z)^{-1} Gamma^+ x(z), with the (z - conj z0) factor in full form."""
    chain_validate(r.op, chain)
    verdict = classify_point(r, chain.alpha)
    if verdict.is_generalized_zero is None:
        raise SingularMatrixFunction("Q is not regular; cannot construct a pcf")
    if verdict.is_generalized_zero:
        raise AlphaIsGeneralizedZero(
            f"alpha = {chain.alpha} is a generalized zero of Q; use the regularized construction"
        )
    q = build_q(r).q
    p = r.gamma_plus.to_rat() @ _chain_poly(chain)
    if r.form == "full":
        p = p.scale(RatFunc(Poly([-r.z0.conj(), 1])))
    eta = q.inverse() @ p
    return PcfCandidate(
        eta=tuple(_vec_entries(eta)),
        alpha=chain.alpha,
        provenance="constructed_eq_eta",
        chain=chain,
    )


def _shift_enumeration(m: int, seed: int = 0x5EED):
    """Deterministic S search order: scalar multiples of I, then random Hermitian."""
    scalars = [0, 1, -1, 2, -2, Fraction(1, 2), Fraction(-1, 2), 3, -3,
               Fraction(1, 3), Fraction(-1, 3), 4, -4, Fraction(1, 4), Fraction(-1, 4), 5]
    for s in scalars:
        yield ConstMatrix.identity(m).scale(QQi(s))
    rng = random.Random(seed)

    def rat():
        return Fraction(rng.randint(-8, 8), 4)

    for _ in range(16):
        grid = [[None] * m for _ in range(m)]
        for i in range(m):
            grid[i][i] = QQi(rat())
            for j in range(i + 1, m):
                c = QQi(rat(), rat())
                grid[i][j] = c
                grid[j][i] = c.conj()
        yield ConstMatrix(grid)


def construct_pcf_regularized(r: Realization, chain: JordanChain) -> PcfCandidate:
    """Shift-regularized form eta = (Q + S)^{-1} p(z) with a bounded search for S.

    Accepts the first Hermitian S making Q + S regular with alpha not a
    generalized zero; the pcf of Q + S is then a pcf of Q with identical
    limits.
    """
    chain_validate(r.op, chain)
    alpha = QQi(chain.alpha)
    q0 = build_q(r).q
    gz = gamma_z(r)
    agz = adjoint_gamma_zbar(r)
    res = r.op_resolvent
    p = r.gamma_plus.to_rat() @ _chain_poly(chain)
    if r.form == "full":
        p = p.scale(RatFunc(Poly([-r.z0.conj(), 1])))
    for s in _shift_enumeration(r.m):
        q = q0 + s.to_rat()
        if q.det().is_zero():
            continue
        qinv = q.inverse()
        rhat = res - gz @ qinv @ agz
        if rhat.min_order_at(alpha) < 0:
            continue
        eta = qinv @ p
        return PcfCandidate(
            eta=tuple(_vec_entries(eta)),
            alpha=chain.alpha,
            provenance="constructed_regularized",
            chain=chain,
            shift=s,
            poly_part=tuple(_vec_entries(p)),
        )
    raise SearchExhausted("no regularizing shift S found in the bounded enumeration")


def recover_chain(r: Realization, cand: PcfCandidate, ell: int) -> JordanChain:
    """x_j = j-th Taylor coefficient of Gamma_z eta(z) at alpha."""
    report = verify_pcf(build_q(r), cand)
    if report.order < ell:
        raise ValueError(f"candidate has verified order {report.order} < {ell}")
    gz = gamma_z(r) @ RatMatrix([[f] for f in cand.eta])
    alpha = QQi(cand.alpha)
    entries = _vec_entries(gz)
    if any(f.order_at(alpha) < 0 for f in entries):
        raise PoleInChainRecovery("Gamma_z eta has a pole at alpha")
    coeffs = [f.taylor(alpha, ell) for f in entries]
    vectors = tuple(
        ConstMatrix([[coeffs[i][j]] for i in range(len(entries))]) for j in range(ell)
    )
    chain = JordanChain(cand.alpha, vectors)
    chain_validate(r.op, chain)
    return chain


def gram_products(
    r: Realization,
    cand_a: PcfCandidate,
    cand_b: PcfCandidate,
    ell: int,
) -> ConstMatrix:
    """l x l matrix of inner products [x_i^(a), x_j^(b)] from the kernel pairing."""
    if cand_a.alpha != cand_b.alpha:
        raise ValueError("Gram products require candidates at the same point")
    q = build_q(r)
    for cand in (cand_a, cand_b):
        if verify_pcf(q, cand).order < ell:
            raise ValueError("both candidates must have verified order >= ell")
    alpha = QQi(cand_a.alpha)
    k_ab = PairKernel(q.q, cand_a.eta, cand_b.eta)
    return ConstMatrix(
        [[k_ab.taylor_coeff(alpha, i, j) for j in range(ell)] for i in range(ell)]
    )


@dataclass(frozen=True)
class CororderRow:
    chain_index: int
    prefix_length: int
    maximal: bool
    order: int
    strong: bool


def cororder_probe(r: Realization, alpha) -> List[CororderRow]:
    """Order table over all canonical chains and proper prefixes at alpha.

    Maximal chains must come out with order exactly their length; non-maximal
    prefixes may jump higher.
    """
    q = build_q(r)
    rows = []
    for idx, chain in enumerate(jordan_chains(r.op, alpha)):
        for ell in range(1, chain.length + 1):
            cand = construct_pcf(r, chain.prefix(ell))
            rep = verify_pcf(q, cand)
            rows.append(
                CororderRow(
                    chain_index=idx,
                    prefix_length=ell,
                    maximal=(ell == chain.length),
                    order=rep.order,
                    strong=rep.strong,
                )
            )
    return rows


# ---------------------------------------------------------------------------
# root functions (generalized zeros)


def hat_chains_at(r: Realization, beta) -> List[JordanChain]:
    """Canonical Jordan chains of the inverse function's representing relation
    at a finite rational real beta, read off the Laurent data of R_hat.

    Works uniformly in the operator and relation cases: with the principal
    part R_hat(z) = -E/(z-beta) - N E/(z-beta)^2 - ..., the chains are those
    of the nilpotent action N on ran(E).
    """
    beta = Fraction(beta)
    rhat = inverse_resolvent(r)
    bq = QQi(beta)
    order = rhat.min_order_at(bq)
    if order >= 0:
        raise ValueError(f"{beta} is not a generalized zero")
    p = int(-order)
    # coefficients of (z-beta)^p * R_hat at beta: index k gives the 1/(z-beta)^{p-k} part
    lin = RatFunc(Poly([-bq, 1]))
    fac = RatFunc(1)
    for _ in range(p):
        fac = fac * lin
    shifted = RatMatrix([[e * fac for e in row] for row in rhat.entries])
    coeffs = shifted.taylor(bq, p + 1)
    e_proj = -coeffs[p - 1]  # B_1 = -E
    n_e = -coeffs[p - 2] if p >= 2 else ConstMatrix.zero(r.n, r.n)  # B_2 = -N E
    basis = _column_basis(e_proj)
    if not basis:
        raise ValueError("empty spectral subspace despite a resolvent pole")
    v = ConstMatrix([[b.entries[i][0] for b in basis] for i in range(r.n)])
    # restriction M_r with (N E) V = V M_r; consistent because ran(E) is invariant
    m_r = _solve_columns(v, n_e @ v)
    inner = jordan_chains(m_r, Fraction(0))
    out = []
    for chain in inner:
        out.append(JordanChain(beta, tuple(v @ x for x in chain.vectors)))
    return out


def _column_basis(m: ConstMatrix) -> List[ConstMatrix]:
    grid, pivots = m._rref()
    return [m.column(c) for c in pivots]


def _solve_columns(v: ConstMatrix, rhs: ConstMatrix) -> ConstMatrix:
    """Solve V X = RHS for X (V with full column rank, system consistent)."""
    aug = v.hstack(rhs)
    grid, pivots = aug._rref()
    r = v.cols
    if len(pivots) < r or pivots[:r] != list(range(r)):
        raise ValueError("V does not have full column rank")
    # consistency: rows beyond the rank must be zero
    for i in range(r, v.rows):
        if any(grid[i]):
            raise ValueError("inconsistent system in subspace restriction")
    return ConstMatrix([row[r:] for row in grid[:r]])


def construct_root_function(r: Realization, hat_chain: JordanChain) -> RootCandidate:
    """xi with Q xi a pcf of Q_hat at beta, built from a chain of the inverse's
    representing relation: xi = Q^{-1} eta_hat = -(z - conj z0) Gamma_hat^+ x(z).
    """
    beta = hat_chain.alpha
    verdict = classify_point(r, beta)
    if verdict.is_generalized_zero is None:
        raise SingularMatrixFunction("Q is not regular")
    if not verdict.is_generalized_zero:
        raise ValueError(f"beta = {beta} is not a generalized zero of Q")
    if verdict.is_generalized_pole:
        raise BetaIsGeneralizedPole(
            f"beta = {beta} is also a generalized pole of Q; the plain construction fails"
        )
    rf = as_full(r)
    ghat_plus = (hat_gamma(rf).conj_transpose() @ rf.gram).to_rat()
    x = _chain_poly(hat_chain)
    xi = (ghat_plus @ x).scale(RatFunc(Poly([-rf.z0.conj(), 1]))).scale(RatFunc(-1))
    return RootCandidate(
        xi=tuple(_vec_entries(xi)),
        beta=beta,
        provenance="constructed_eq_eta",
        hat_chain=hat_chain,
    )


def verify_root_function(
    q: Union[QFunction, RatMatrix],
    cand: RootCandidate,
    order_cap: Optional[int] = None,
) -> RootReport:
    """Conditions (K)-(M_s): xi regular with nonzero limit, Q xi vanishing."""
    qm = _as_matrix(q)
    if order_cap is None:
        order_cap = q.source.n if isinstance(q, QFunction) else qm.rows + max(
            e.den.degree for row in qm.entries for e in row
        )
    beta = QQi(cand.beta)
    cap = max(1, order_cap)

    regular = all(f.order_at(beta) >= 0 for f in cand.xi)
    xi_limits: List[ConstMatrix] = []
    xi0_nonzero = False
    if regular:
        coeffs = [f.taylor(beta, cap) for f in cand.xi]
        fact = 1
        for j in range(cap):
            if j:
                fact *= j
            xi_limits.append(ConstMatrix([[coeffs[i][j] * QQi(fact)] for i in range(len(coeffs))]))
        xi0_nonzero = not xi_limits[0].is_zero()
    limits_exist = tuple(PASS if regular and xi0_nonzero else FAIL for _ in range(cap))

    qxi = qm @ RatMatrix([[f] for f in cand.xi])
    min_order = min(f.order_at(beta) for f in _vec_entries(qxi))
    vanish = tuple(PASS if min_order >= j + 1 else FAIL for j in range(cap))

    kernel = PairKernel(qm, cand.xi, cand.xi)
    kernel_regular = kernel.regular_at(beta)
    kernel_limits = tuple(PASS if kernel_regular else FAIL for _ in range(cap))
    kernel_bounded = tuple(PASS if kernel_regular else INCONCLUSIVE for _ in range(cap))

    order = 0
    for j in range(cap):
        if vanish[j] == PASS and limits_exist[j] == PASS and kernel_bounded[j] == PASS:
            order = j + 1
        else:
            break
    strong = order > 0 and all(kernel_limits[j] == PASS for j in range(order))
    return RootReport(
        order=order,
        strong=strong,
        limits_exist=limits_exist,
        vanish=vanish,
        kernel_bounded=kernel_bounded,
        kernel_limits=kernel_limits,
        xi_derivative_limits=tuple(xi_limits),
    )


def root_to_pcf(q: Union[QFunction, RatMatrix], cand: RootCandidate) -> PcfCandidate:
    """The mirror map: Q xi as a candidate pcf of Q_hat at beta."""
    qm = _as_matrix(q)
    qxi = qm @ RatMatrix([[f] for f in cand.xi])
    return PcfCandidate(
        eta=tuple(_vec_entries(qxi)),
        alpha=cand.beta,
        provenance="user_supplied",
    )


# ---------------------------------------------------------------------------
# structural identities of the construction (full-form picture)


def check_rewrite_identity(r: Realization, chain: JordanChain) -> bool:
    """Gamma_hat_z Gamma^+ x(z) = -(x(z) + (z-a)^l (I + (z-c)R_hat)(A-c)^{-1} x_{l-1})/(z-c)
    with c = conj(z0); exact identity of rational n-vectors."""
    rf = as_full(r)
    ghz = gamma_z(rf) @ hat_q(rf)
    x = _chain_poly(chain)
    lhs = ghz @ (rf.gamma_plus.to_rat() @ x)
    c = rf.z0.conj()
    zc = RatFunc(Poly([-c, 1]))
    rhat = inverse_resolvent(rf)
    res_c = (rf.op - ConstMatrix.identity(rf.n).scale(c)).inverse()
    za = RatFunc(Poly([-QQi(chain.alpha), 1]))
    fac = RatFunc(1)
    for _ in range(chain.length):
        fac = fac * za
    tail = (RatMatrix.identity(rf.n) + rhat.scale(zc)) @ (res_c @ chain.vectors[-1]).to_rat()
    rhs = (x + tail.scale(fac)).scale(zc.inverse()).scale(RatFunc(-1))
    return lhs == rhs


def check_eta_closed_form(r: Realization, chain: JordanChain) -> bool:
    """The constructed full-form eta equals
    (z-c)(z-a)^l Gamma_hat^+ (I + (z-c) R_hat)(A-c)^{-1} x_{l-1}, c = conj(z0)."""
    rf = as_full(r)
    cand = construct_pcf(rf, chain)
    eta = RatMatrix([[f] for f in cand.eta])
    c = rf.z0.conj()
    zc = RatFunc(Poly([-c, 1]))
    za = RatFunc(Poly([-QQi(chain.alpha), 1]))
    fac = zc
    for _ in range(chain.length):
        fac = fac * za
    rhat = inverse_resolvent(rf)
    ghat_plus = (hat_gamma(rf).conj_transpose() @ rf.gram).to_rat()
    res_c = (rf.op - ConstMatrix.identity(rf.n).scale(c)).inverse()
    rhs = (
        ghat_plus @ (RatMatrix.identity(rf.n) + rhat.scale(zc)) @ (res_c @ chain.vectors[-1]).to_rat()
    ).scale(fac)
    return eta == rhs
