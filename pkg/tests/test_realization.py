"""Realization validation, Q construction, negative index, inverse machinery."""

from fractions import Fraction

import pytest

from polecancel.field import Poly, QQi, RatFunc
from polecancel.matrices import ConstMatrix, RatMatrix
from polecancel.realization import (
    QFunction,
    Realization,
    RealizationError,
    RelationReport,
    as_full,
    build_q,
    choose_base_point,
    hat_gamma,
    hat_gamma_z,
    hat_q,
    hat_realization,
    inverse_resolvent,
    kappa,
    kappa_sample,
    minimality,
    sample_upper_half_points,
    validate,
)

Z = Poly.x()


def _codes(r):
    return [code for code, _ in validate(r)]


def test_validate_failure_codes():
    flip = ConstMatrix([[0, 1], [1, 0]])
    nilp = ConstMatrix([[0, 1], [0, 0]])
    eye = ConstMatrix.identity(2)
    assert validate(Realization(flip, nilp, eye)) == []
    bad_gram = ConstMatrix([[0, 1], [2, 0]])
    assert "GramNotHermitian" in _codes(Realization(bad_gram, nilp, eye))
    singular = ConstMatrix([[1, 1], [1, 1]])
    assert "GramSingular" in _codes(Realization(singular, nilp, eye))
    assert "NotSelfAdjoint" in _codes(Realization(eye, nilp, eye))
    assert "BadBasePoint" in _codes(Realization(flip, nilp, eye, z0=QQi(2)))
    assert "BadBasePoint" in _codes(Realization(flip, nilp, eye, z0=QQi(0, -1)))
    assert "BadForm" in _codes(Realization(flip, nilp, eye, form="other"))
    skew = ConstMatrix([[QQi(0, 1)]])
    assert "ShiftNotHermitian" in _codes(
        Realization(ConstMatrix([[1]]), ConstMatrix([[0]]), ConstMatrix([[1]]), shift=skew)
    )


def test_q_golden_2x2_nilpotent(ex31a):
    q = build_q(ex31a).q
    inv_z = RatFunc(-1, Z)
    expected = RatMatrix([
        [RatFunc(0), inv_z],
        [inv_z, RatFunc(-1, Z * Z)],
    ])
    assert q == expected


def test_q_golden_scalar(ex31b):
    q = build_q(ex31b).q
    assert q == RatMatrix([[RatFunc(Poly([-1, 2]), Z * Z)]])


def test_q_golden_6dim(ex33):
    q = build_q(ex33).q
    zp1 = Poly([1, 1])
    expected = RatMatrix([
        [RatFunc(1, Z * Z * Poly([-1, 1])), RatFunc(1, Z)],
        [RatFunc(1, Z), RatFunc(Poly([-1, -2]), zp1 * zp1 * zp1)],
    ])
    assert q == expected


def test_as_full_preserves_q(ex31a, ex31b, ex33):
    for r in (ex31a, ex31b, ex33):
        rf = as_full(r)
        assert rf.form == "full"
        assert build_q(rf).q == build_q(r).q


def test_minimality(ex31a, ex31b, ex33):
    assert minimality(ex31a) and minimality(ex31b) and minimality(ex33)
    flip = ConstMatrix([[0, 1], [1, 0]])
    dead = Realization(flip, ConstMatrix([[0, 1], [0, 0]]), ConstMatrix([[0], [0]]))
    assert not minimality(dead)
    with pytest.raises(RealizationError):
        kappa(dead)


def test_kappa_exact(ex31a, ex31b, ex33):
    assert kappa(ex31a) == 1
    assert kappa(ex31b) == 1
    assert kappa(ex33) == 4


def test_kappa_sample_matches_exact(ex31a, ex31b, ex33):
    pts = sample_upper_half_points(200, 42)
    for r in (ex31a, ex31b, ex33):
        assert kappa_sample(build_q(r), pts) == kappa(r)


def test_kappa_sample_family(small_family):
    pts = sample_upper_half_points(60, 7)
    for r in small_family:
        assert kappa_sample(build_q(r), pts) <= kappa(r)


def test_q_real_symmetry_enforced(ex31a):
    bad = RatMatrix([[RatFunc(Poly([QQi(0, 1)]))]])
    with pytest.raises(RealizationError):
        QFunction(bad, ex31a)


def test_hat_q_is_negative_inverse(ex31a, ex33):
    for r in (ex31a, ex33):
        q = build_q(r).q
        m = q.rows
        assert q @ hat_q(r) == RatMatrix.identity(m).scale(RatFunc(-1))


def test_hat_gamma_is_hat_gamma_z_at_base(ex31a):
    rf = as_full(ex31a)
    assert hat_gamma_z(rf).eval(rf.z0) == hat_gamma(rf)


def test_hat_realization_relation_cases(ex31a, ex31b, ex33):
    # the inverse of each golden function is representable only by a relation
    for r in (ex31a, ex31b, ex33):
        rep = hat_realization(r)
        assert isinstance(rep, RelationReport)
        assert rep.multivalued_dim >= 1


def test_hat_realization_operator_case():
    # Q(z) = (z - 1)/z has inverse -Q^{-1} = -z/(z - 1) with a plain operator
    # representation: the reconstructed realization reproduces -Q^{-1} exactly.
    r = Realization(
        ConstMatrix([[1]]),
        ConstMatrix([[0]]),
        ConstMatrix([[1]]),
        shift=ConstMatrix([[1]]),
    )
    rep = hat_realization(r)
    assert isinstance(rep, Realization)
    assert rep.op == ConstMatrix([[1]])
    assert build_q(rep).q == hat_q(r)


def test_inverse_resolvent_poles_are_zeros(ex31b):
    # Q(z) = (2z - 1)/z^2 vanishes at 1/2; the reconstructed resolvent has its
    # only finite real pole there
    rhat = inverse_resolvent(as_full(ex31b))
    half = QQi(Fraction(1, 2))
    assert rhat.min_order_at(half) < 0
    assert rhat.min_order_at(QQi(0)) >= 0


def test_choose_base_point_skips_eigenvalues():
    flip = ConstMatrix([[0, 1], [1, 0]])
    a = ConstMatrix([[QQi(0, 1), 0], [0, QQi(0, -1)]])
    z0 = choose_base_point(flip, a, ConstMatrix.identity(2))
    assert z0 == QQi(0, 2)


def test_choose_base_point_default():
    flip = ConstMatrix([[0, 1], [1, 0]])
    nilp = ConstMatrix([[0, 1], [0, 0]])
    assert choose_base_point(flip, nilp, ConstMatrix.identity(2)) == QQi(0, 1)
