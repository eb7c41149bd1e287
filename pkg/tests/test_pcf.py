"""Pole cancellation functions: construction, verification, chain recovery,
root functions at generalized zeros, and the structural identities."""

from fractions import Fraction

import pytest

from polecancel.field import Poly, QQi, RatFunc
from polecancel.matrices import ConstMatrix, RatMatrix, SingularMatrixFunction
from polecancel.pcf import (
    AlphaIsGeneralizedZero,
    PairKernel,
    PcfCandidate,
    check_eta_closed_form,
    check_rewrite_identity,
    construct_pcf,
    construct_pcf_regularized,
    construct_root_function,
    cororder_probe,
    gram_products,
    hat_chains_at,
    kernel_quadratic,
    recover_chain,
    root_to_pcf,
    verify_pcf,
    verify_root_function,
)
from polecancel.realization import Realization, build_q, hat_q
from polecancel.spectral import JordanChain, jordan_chains

Z = Poly.x()


def test_construct_golden_2x2(ex31a):
    chain = jordan_chains(ex31a.op, 0)[0]
    assert chain.length == 2
    cand = construct_pcf(ex31a, chain.prefix(1))
    assert cand.eta == (RatFunc(Poly([0, -1])), RatFunc(0))
    rep = verify_pcf(build_q(ex31a), cand)
    assert rep.order == 1 and rep.strong


def test_construct_golden_scalar(ex31b):
    # eta(z) = z^2 / (2z - 1); the length-1 prefix already has order 2
    chain = jordan_chains(ex31b.op, 0)[0]
    cand = construct_pcf(ex31b, chain.prefix(1))
    assert cand.eta == (RatFunc(Poly([0, 0, Fraction(1, 2)]), Poly([Fraction(-1, 2), 1])),)
    rep = verify_pcf(build_q(ex31b), cand)
    assert rep.order == 2 and rep.strong
    full = construct_pcf(ex31b, chain)
    assert verify_pcf(build_q(ex31b), full).order == 2


def test_cororder_tables(ex31a, ex31b):
    for r in (ex31a, ex31b):
        rows = cororder_probe(r, 0)
        assert rows
        for row in rows:
            assert row.order >= row.prefix_length
            if row.maximal:
                assert row.order == row.prefix_length


def test_plain_construction_fails_at_pole_and_zero(ex33):
    # alpha = 0 is simultaneously a pole and a zero: the direct formula is
    # rejected, and the function it would produce fails condition (A)
    chain = jordan_chains(ex33.op, 0)[0]
    assert chain.length == 2
    with pytest.raises(AlphaIsGeneralizedZero):
        construct_pcf(ex33, chain)
    q = build_q(ex33)
    p = ex33.gamma_plus.to_rat() @ RatMatrix(
        [[RatFunc(Poly([chain.vectors[0].entries[i][0], chain.vectors[1].entries[i][0]]))]
         for i in range(6)]
    )
    eta = q.q.inverse() @ p
    cand = PcfCandidate(
        eta=tuple(row[0] for row in eta.entries),
        alpha=Fraction(0),
        provenance="user_supplied",
    )
    rep = verify_pcf(q, cand)
    assert rep.order == 0
    assert rep.vanish[0] == "fail"


def test_regularized_construction_golden(ex33):
    chain = jordan_chains(ex33.op, 0)[0]
    cand = construct_pcf_regularized(ex33, chain)
    assert cand.shift == ConstMatrix.identity(2)
    rep = verify_pcf(build_q(ex33), cand)
    assert rep.order == 2 and rep.strong
    assert recover_chain(ex33, cand, 2) == chain


def test_regularized_handles_non_regular_q():
    # Q = [[-1/z, 0], [0, 0]] has det identically zero: the direct route is
    # impossible in principle, the shifted one succeeds
    r = Realization(ConstMatrix([[1]]), ConstMatrix([[0]]), ConstMatrix([[1, 0]]))
    chain = jordan_chains(r.op, 0)[0]
    with pytest.raises(SingularMatrixFunction):
        construct_pcf(r, chain)
    cand = construct_pcf_regularized(r, chain)
    shifted = r.with_shift(cand.shift)
    rep = verify_pcf(build_q(shifted), cand)
    assert rep.order >= 1


def test_recover_requires_order():
    cand = PcfCandidate(eta=(RatFunc(1),), alpha=Fraction(0), provenance="user_supplied")
    r = Realization(ConstMatrix([[1]]), ConstMatrix([[0]]), ConstMatrix([[1]]))
    with pytest.raises(ValueError):
        recover_chain(r, cand, 1)


def test_gram_products_match_state_space(ex33):
    chain = jordan_chains(ex33.op, 0)[0]
    cand = construct_pcf_regularized(ex33, chain)
    shifted = ex33.with_shift(cand.shift)
    got = gram_products(shifted, cand, cand, 2)
    for i in range(2):
        for j in range(2):
            expected = (
                chain.vectors[j].conj_transpose() @ ex33.gram @ chain.vectors[i]
            ).entries[0][0]
            assert got.entries[i][j] == expected


def test_gram_products_cross_candidates(ex33):
    base = jordan_chains(ex33.op, 0)[0]
    other = JordanChain(base.alpha, (base.vectors[0], base.vectors[1] + base.vectors[0]))
    ca = construct_pcf_regularized(ex33, base)
    cb = construct_pcf_regularized(ex33, other)
    assert ca.shift == cb.shift
    shifted = ex33.with_shift(ca.shift)
    got = gram_products(shifted, ca, cb, 2)
    for i in range(2):
        for j in range(2):
            expected = (
                other.vectors[j].conj_transpose() @ ex33.gram @ base.vectors[i]
            ).entries[0][0]
            assert got.entries[i][j] == expected


def test_pair_kernel_against_bivariate_oracle(ex31b):
    chain = jordan_chains(ex31b.op, 0)[0]
    cand = construct_pcf(ex31b, chain.prefix(1))
    q = build_q(ex31b).q
    fast = PairKernel(q, cand.eta, cand.eta)
    slow = kernel_quadratic(q, cand.eta, cand.eta)
    zero = QQi(0)
    assert fast.regular_at(zero)
    for i in range(3):
        for j in range(3):
            assert fast.taylor_coeff(zero, i, j) == slow.taylor_coeff(zero, zero, i, j)


def test_root_function_golden(ex31b):
    chains = hat_chains_at(ex31b, Fraction(1, 2))
    assert [c.length for c in chains] == [1]
    cand = construct_root_function(ex31b, chains[0])
    # always polynomial by construction
    for f in cand.xi:
        assert f.den == Poly([1])
    rep = verify_root_function(build_q(ex31b), cand)
    assert rep.order == 1 and rep.strong


def test_root_pcf_mirror(ex31b):
    chains = hat_chains_at(ex31b, Fraction(1, 2))
    cand = construct_root_function(ex31b, chains[0])
    root_rep = verify_root_function(build_q(ex31b), cand)
    mirrored = root_to_pcf(build_q(ex31b), cand)
    pcf_rep = verify_pcf(hat_q(ex31b), mirrored, order_cap=ex31b.n)
    assert pcf_rep.order == root_rep.order


def test_structural_identities_golden(ex31a, ex31b):
    for r in (ex31a, ex31b):
        chain = jordan_chains(r.op, 0)[0]
        for ell in range(1, chain.length + 1):
            assert check_rewrite_identity(r, chain.prefix(ell))
            assert check_eta_closed_form(r, chain.prefix(ell))


def test_family_order_equals_chain_length(small_family):
    from polecancel.realization import build_q as bq
    from polecancel.spectral import classify_point, eigenvalues_rational

    exercised = 0
    for r in small_family:
        if bq(r).q.det().is_zero():
            continue
        for alpha, _ in eigenvalues_rational(r.op).eigenvalues:
            verdict = classify_point(r, alpha)
            if verdict.is_generalized_zero:
                continue
            chain = jordan_chains(r.op, alpha)[0]
            cand = construct_pcf(r, chain)
            rep = verify_pcf(bq(r), cand)
            assert rep.order == chain.length
            recovered = recover_chain(r, cand, chain.length)
            assert recovered.length == chain.length
            exercised += 1
            break
    assert exercised >= 2
