"""Jordan structure of the state operator and pole/zero classification."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from polecancel.field import QQi
from polecancel.matrices import ConstMatrix
from polecancel.spectral import (
    ChainBroken,
    JordanChain,
    NotAnEigenvalue,
    chain_freedom,
    chain_validate,
    classify_point,
    eigenvalues_rational,
    generalized_zeros_rational,
    jordan_chains,
)


def test_eigenvalues_rational_mixed():
    # blocks: J_2(1), [3], and a rotation with irrational spectrum
    a = ConstMatrix([
        [1, 1, 0, 0, 0],
        [0, 1, 0, 0, 0],
        [0, 0, 3, 0, 0],
        [0, 0, 0, 0, 2],
        [0, 0, 0, 1, 0],
    ])
    spec = eigenvalues_rational(a)
    assert dict(spec.eigenvalues) == {Fraction(1): 2, Fraction(3): 1}
    assert spec.residual_degree == 2


def test_jordan_chains_block_sizes():
    # nilpotent with partition (3, 1) at 0
    a = ConstMatrix([
        [0, 1, 0, 0],
        [0, 0, 1, 0],
        [0, 0, 0, 0],
        [0, 0, 0, 0],
    ])
    chains = jordan_chains(a, 0)
    assert [c.length for c in chains] == [3, 1]
    for c in chains:
        assert chain_validate(a, c)
    with pytest.raises(NotAnEigenvalue):
        jordan_chains(a, 5)


def test_jordan_chains_deterministic():
    a = ConstMatrix([[2, 1], [0, 2]])
    assert jordan_chains(a, 2) == jordan_chains(a, 2)


@given(st.integers(0, 2 ** 30))
@settings(max_examples=15, deadline=None)
def test_jordan_chains_similarity_property(seed):
    # conjugate a fixed Jordan form by a random invertible map; the computed
    # chain lengths must match the original partition and validate exactly
    from polecancel.sampling import _rand_invertible
    import random

    rng = random.Random(seed)
    j = ConstMatrix([
        [0, 1, 0, 0],
        [0, 0, 0, 0],
        [0, 0, 0, 1],
        [0, 0, 0, 0],
    ])
    p = _rand_invertible(rng, 4)
    a = p.inverse() @ j @ p
    chains = jordan_chains(a, 0)
    assert sorted(c.length for c in chains) == [2, 2]
    for c in chains:
        assert chain_validate(a, c)


def test_chain_validate_rejects_broken():
    a = ConstMatrix([[0, 1], [0, 0]])
    good = jordan_chains(a, 0)[0]
    bad = JordanChain(Fraction(0), (good.vectors[1], good.vectors[0]))
    with pytest.raises(ChainBroken):
        chain_validate(a, bad)
    with pytest.raises(ChainBroken):
        chain_validate(a, JordanChain(Fraction(0), (ConstMatrix.zero(2, 1),)))


def test_chain_freedom_single_block():
    # one block J_3(0): x_1 may move along ran(N^1) cap ker(N) = span(e_0),
    # x_2 along ker(N) = span(e_0)
    a = ConstMatrix([
        [0, 1, 0],
        [0, 0, 1],
        [0, 0, 0],
    ])
    chain = jordan_chains(a, 0)[0]
    freedom = chain_freedom(a, chain)
    assert set(freedom) == {1, 2}
    for j, basis in freedom.items():
        for v in basis:
            shifted = list(chain.vectors)
            if j == chain.length - 1:
                shifted[j] = shifted[j] + v
                assert chain_validate(a, JordanChain(chain.alpha, tuple(shifted)))


def test_classify_point_golden(ex31b, ex33):
    # Q(z) = (2z - 1)/z^2: pole at 0 (one chain of length 2), zero at 1/2
    v0 = classify_point(ex31b, 0)
    assert v0.is_generalized_pole and not v0.is_generalized_zero
    assert v0.pole_partial_multiplicities == (2,)
    vh = classify_point(ex31b, Fraction(1, 2))
    assert not vh.is_generalized_pole and vh.is_generalized_zero
    assert vh.zero_resolvent_pole_order == 1
    # the 6-dimensional example: 0 is both a pole and a zero
    v = classify_point(ex33, 0)
    assert v.is_generalized_pole and v.is_generalized_zero


def test_generalized_zeros_golden(ex31a, ex31b):
    assert generalized_zeros_rational(ex31b) == [(Fraction(1, 2), 1)]
    assert generalized_zeros_rational(ex31a) == []


def test_generalized_zeros_family(small_family):
    # each reported zero must classify as a zero, with matching order
    from polecancel.realization import build_q

    for r in small_family:
        if build_q(r).q.det().is_zero():
            continue
        for root, order in generalized_zeros_rational(r):
            v = classify_point(r, root)
            assert v.is_generalized_zero
            assert v.zero_resolvent_pole_order == order
