"""Exact symbolic identities connecting Gamma_z, Q and the inverse picture."""

from polecancel.identities import run_identity_suite
from polecancel.matrices import ConstMatrix
from polecancel.realization import Realization


def _assert_all_pass(r):
    for name, ok in run_identity_suite(r):
        assert ok, name


def test_identities_golden(ex31a, ex31b, ex33):
    for r in (ex31a, ex31b, ex33):
        _assert_all_pass(r)


def test_identities_full_form(ex31a):
    from polecancel.realization import as_full

    _assert_all_pass(as_full(ex31a))


def test_identities_with_shift(ex31b):
    _assert_all_pass(ex31b.with_shift(ConstMatrix([[2]])))


def test_identities_random_family(small_family):
    for r in small_family:
        _assert_all_pass(r)


def test_hat_checks_present_when_regular(ex31a):
    names = [name for name, _ in run_identity_suite(ex31a)]
    assert "hat_gamma_identity" in names and "hat_resolvent_identity" in names


def test_hat_checks_skipped_when_not_regular():
    # det Q identically zero: only the base identities apply
    r = Realization(ConstMatrix([[1]]), ConstMatrix([[0]]), ConstMatrix([[1, 0]]))
    names = [name for name, _ in run_identity_suite(r)]
    assert "hat_gamma_identity" not in names
    _assert_all_pass(r)
