import numpy as np
import pytest

from adcodes import concatenate, dual_rail, get_code


@pytest.fixture(scope="session")
def five():
    return get_code("five_1_3")


@pytest.fixture(scope="session")
def leung():
    return get_code("leung_4_1")


@pytest.fixture(scope="session")
def shor():
    return get_code("shor_9_1")


@pytest.fixture(scope="session")
def dualrail():
    return get_code("dualrail")


@pytest.fixture(scope="session")
def ten_code(five):
    """The concatenated [[10,1]] code."""
    return concatenate(five, dual_rail())


@pytest.fixture(scope="session")
def eight_two_code():
    """The concatenated [[8,2]] code from the [[4,2,2]] outer code."""
    return concatenate(get_code("c4_2_2"), dual_rail())


# Eq-style reference vectors, frozen from first principles.

def cat_state(m: int, sign: int) -> np.ndarray:
    v = np.zeros(1 << m)
    v[0] = 1 / np.sqrt(2)
    v[-1] = sign / np.sqrt(2)
    return v


@pytest.fixture(scope="session")
def leung_vectors():
    v0 = np.zeros(16)
    v0[0b0000] = v0[0b1111] = 1 / np.sqrt(2)
    v1 = np.zeros(16)
    v1[0b0011] = v1[0b1100] = 1 / np.sqrt(2)
    return v0, v1


@pytest.fixture(scope="session")
def shor_vectors():
    plus = cat_state(3, +1)
    minus = cat_state(3, -1)
    v0 = np.kron(np.kron(plus, plus), plus)
    v1 = np.kron(np.kron(minus, minus), minus)
    return v0, v1
