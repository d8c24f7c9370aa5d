import math

import numpy as np
import pytest

from noninertial_tangles.states import StateVector, w_state
from noninertial_tangles.tensor import DensityMatrix, ModeRegister
from noninertial_tangles.utils import R_MAX, Party


@pytest.fixture()
def w4():
    return w_state(4)


@pytest.fixture()
def bell():
    register = ModeRegister.minkowski([Party.A, Party.B])
    psi = StateVector(register, np.array([1, 0, 0, 1]) / math.sqrt(2))
    return DensityMatrix(register, np.outer(psi.amplitudes, psi.amplitudes.conj()))


@pytest.fixture()
def r_grid():
    return list(np.linspace(0, R_MAX, 10))


@pytest.fixture()
def rng():
    return np.random.default_rng(20221019)
