"""Single-mode Rindler expansion of uniformly accelerated parties.

An accelerated party's Minkowski mode splits into a Region I mode, which the observer
can reach, and a causally disconnected Region II mode:

    |0>_M -> cos r |0_I 0_II> + sin r |1_I 1_II>
    |1>_M -> |1_I 0_II>

Region II is traced out to obtain the state the observers actually share.
"""

from __future__ import annotations

import logging
import math
from functools import lru_cache
from typing import FrozenSet, Iterable

import numpy as np

from .errors import InvalidScenarioError
from .states import StateVector, initial_state, reduced_density
from .tensor import DensityMatrix, ModeRegister
from .utils import R_MAX, R_TOLERANCE, Party, Region, StateFamily, scenario_name

_logger = logging.getLogger(__name__)


class Scenario:
    """Accelerated parties and their shared acceleration parameter.

    Args:
        accelerated: Parties in uniform acceleration. All of them share r.
        r: Acceleration parameter in radians within [0, pi/4].
    """

    def __init__(self, accelerated: Iterable[Party], r: float) -> None:
        accelerated = frozenset(Party(party) for party in accelerated)
        r = float(r)
        if not 0 <= r <= R_MAX + R_TOLERANCE:
            raise InvalidScenarioError(
                f'Acceleration parameter must be within [0, pi/4]. Instead got {r}')
        self._accelerated = accelerated
        self._r = min(r, R_MAX)

    @property
    def accelerated(self) -> FrozenSet[Party]:
        """Get the accelerated parties."""
        return self._accelerated

    @property
    def r(self) -> float:
        """Get the acceleration parameter."""
        return self._r

    @property
    def name(self) -> str:
        """Get the scenario name: sorted accelerated letters or ``none``."""
        return scenario_name(self._accelerated)

    def is_accelerated(self, party: Party) -> bool:
        return party in self._accelerated

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Scenario) and \
            (self._accelerated, self._r) == (other._accelerated, other._r)

    def __hash__(self) -> int:
        return hash((self._accelerated, self._r))

    def __repr__(self) -> str:
        return f'Scenario(accelerated={self.name}, r={self._r})'


class PhysicalAcceleration:
    """Proper acceleration of an observer and the frequency of the observed mode.

    Args:
        a: Proper acceleration. Zero means an inertial observer.
        omega: Mode frequency.
        c: Speed of light in units consistent with a and omega.
    """

    def __init__(self, a: float, omega: float, c: float = 299792458.0) -> None:
        if a < 0 or omega <= 0 or c <= 0:
            raise InvalidScenarioError(
                'Expected a >= 0, omega > 0 and c > 0. Instead got'
                f' a={a}, omega={omega}, c={c}')
        self._a = float(a)
        self._omega = float(omega)
        self._c = float(c)

    @property
    def a(self) -> float:
        """Get the proper acceleration."""
        return self._a

    @property
    def omega(self) -> float:
        """Get the mode frequency."""
        return self._omega

    @property
    def c(self) -> float:
        """Get the speed of light."""
        return self._c


def r_from_acceleration(p: PhysicalAcceleration) -> float:
    """Acceleration parameter r from cos r = 1/sqrt(1 + exp(-2 pi omega c / a)).

    A vanishing acceleration returns the inertial limit r = 0.
    """
    if p.a == 0:
        return 0.0
    exponent = -2 * math.pi * p.omega * p.c / p.a
    # exp underflows to 0 for tiny accelerations which is the r = 0 limit
    return math.acos(1 / math.sqrt(1 + math.exp(exponent)))


def _mode_isometry(r: float) -> np.ndarray:
    """Map of one Minkowski slot to a (Region I, Region II) slot pair.

    Indexed as [I, II, M].
    """
    isometry = np.zeros((2, 2, 2), dtype=complex)
    isometry[0, 0, 0] = math.cos(r)
    isometry[1, 1, 0] = math.sin(r)
    isometry[1, 0, 1] = 1
    return isometry


def unruh_expand(psi: StateVector, scenario: Scenario) -> StateVector:
    """Replace each accelerated party's Minkowski slot by a Region I / II pair.

    The Region I slot takes the place of the Minkowski slot and the Region II slot
    follows right after it, so the register stays in canonical order.

    Args:
        psi: A StateVector over Minkowski slots.
        scenario: The Scenario to apply.

    Returns:
        The enlarged StateVector.
    """
    register = psi.register
    minkowski = {party for party, region in register if region is Region.minkowski}
    missing = scenario.accelerated - minkowski
    if missing:
        raise InvalidScenarioError(
            f'Accelerated parties {scenario_name(missing)} have no Minkowski slot in'
            f' {register.labels}')

    isometry = _mode_isometry(scenario.r)
    slots = list(register.slots)
    tensor = psi.amplitudes.reshape([2] * len(slots))
    # walk backwards so indices of earlier slots stay valid
    for slot in reversed(range(len(slots))):
        party, region = slots[slot]
        if region is not Region.minkowski or party not in scenario.accelerated:
            continue
        tensor = np.tensordot(isometry, tensor, axes=([2], [slot]))
        tensor = np.moveaxis(tensor, [0, 1], [slot, slot + 1])
        slots[slot:slot + 1] = [(party, Region.region_i), (party, Region.region_ii)]

    return StateVector(ModeRegister(slots), tensor.reshape(-1))


def physical_density(psi_expanded: StateVector) -> DensityMatrix:
    """Density matrix of the inertial and Region I slots with Region II traced out."""
    keep = psi_expanded.register.region_indices(Region.minkowski, Region.region_i)
    return reduced_density(psi_expanded, keep)


def region_ii_density(psi_expanded: StateVector) -> DensityMatrix:
    """Density matrix of the Region II slots alone."""
    keep = psi_expanded.register.region_indices(Region.region_ii)
    return reduced_density(psi_expanded, keep)


@lru_cache(maxsize=4096)
def _physical_state(family: StateFamily, accelerated: FrozenSet[Party],
                    r: float) -> DensityMatrix:
    _logger.debug('Building %s state for %s at r=%r', family.value,
                  scenario_name(accelerated), r)
    expanded = unruh_expand(initial_state(family), Scenario(accelerated, r))
    return physical_density(expanded)


def physical_state(scenario: Scenario,
                   family: StateFamily = StateFamily.w) -> DensityMatrix:
    """Physical four-party density matrix of a state family under a scenario.

    Results are cached per (family, accelerated set, r) since every measure at the same
    grid point starts from the same matrix.
    """
    return _physical_state(family, scenario.accelerated, scenario.r)
