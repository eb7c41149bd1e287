import os
import sys
from fractions import Fraction

import pytest

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from polecancel.matrices import ConstMatrix
from polecancel.realization import Realization

GOLDEN_DIR = os.path.join(os.path.dirname(__file__), "..", "golden")


def _flip2():
    return ConstMatrix([[0, 1], [1, 0]])


@pytest.fixture(scope="session")
def ex31a():
    return Realization(_flip2(), ConstMatrix([[0, 1], [0, 0]]), ConstMatrix.identity(2))


@pytest.fixture(scope="session")
def ex31b():
    return Realization(_flip2(), ConstMatrix([[0, 1], [0, 0]]), ConstMatrix([[-1], [1]]))


@pytest.fixture(scope="session")
def ex33():
    g4 = ConstMatrix([
        [0, 1, 0, 0, 0, 0],
        [1, 0, 0, 0, 0, 0],
        [0, 0, -1, 0, 0, 0],
        [0, 0, 0, 0, 0, -1],
        [0, 0, 0, 0, -1, 0],
        [0, 0, 0, -1, 0, 0],
    ])
    a4 = ConstMatrix([
        [0, 1, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0],
        [0, 0, 1, 0, 0, 0],
        [0, 0, 0, -1, 1, 0],
        [0, 0, 0, 0, -1, 1],
        [0, 0, 0, 0, 0, -1],
    ])
    gam4 = ConstMatrix([
        [Fraction(1, 2), -1],
        [1, 0],
        [1, 0],
        [0, Fraction(-1, 2)],
        [0, -1],
        [0, 1],
    ])
    return Realization(g4, a4, gam4)


@pytest.fixture(scope="session")
def small_family():
    from polecancel.sampling import random_family

    return random_family(6, seed=11, max_dim=4)


@pytest.fixture(scope="session")
def family25():
    from polecancel.sampling import random_family

    return random_family(25, seed=23, max_dim=5)
