"""Deterministic random realization generator."""

from polecancel.realization import minimality, validate
from polecancel.sampling import random_family, random_realization


def test_deterministic():
    a = random_realization(seed=5)
    b = random_realization(seed=5)
    assert a.gram == b.gram and a.op == b.op and a.gamma == b.gamma


def test_samples_are_valid_and_minimal(small_family):
    for r in small_family:
        assert validate(r) == []
        assert minimality(r)
        assert 2 <= r.n <= 4


def test_family_seeds_differ():
    fam = random_family(3, seed=2, max_dim=3)
    assert len(fam) == 3
    assert not (fam[0].op == fam[1].op and fam[0].gamma == fam[1].gamma)


def test_param_dim_override():
    r = random_realization(seed=9, max_dim=4, m=1)
    assert r.m == 1
