import math

import numpy as np
import pytest

from noninertial_tangles.errors import InvalidScenarioError
from noninertial_tangles.measures import von_neumann_entropy
from noninertial_tangles.states import pure_density, w_state
from noninertial_tangles.unruh import PhysicalAcceleration, Scenario, \
    physical_density, physical_state, r_from_acceleration, region_ii_density, \
    unruh_expand
from noninertial_tangles.utils import NESTED_SCENARIOS, R_MAX, Party


def test_r_from_acceleration_limits():
    assert r_from_acceleration(PhysicalAcceleration(0, 1.0)) == 0
    assert r_from_acceleration(PhysicalAcceleration(1e30, 1.0, c=1.0)) == \
        pytest.approx(math.pi / 4, abs=1e-12)
    assert r_from_acceleration(PhysicalAcceleration(1e-3, 1.0, c=1.0)) == \
        pytest.approx(0, abs=1e-12)


def test_r_from_acceleration_is_monotone():
    values = [r_from_acceleration(PhysicalAcceleration(a, 1.0, c=1.0))
              for a in (1.0, 10.0, 100.0, 1000.0)]
    assert values == sorted(values)
    assert all(0 < value < R_MAX for value in values)


def test_physical_acceleration_validation():
    with pytest.raises(InvalidScenarioError):
        PhysicalAcceleration(-1, 1.0)
    with pytest.raises(InvalidScenarioError):
        PhysicalAcceleration(1, 0)


def test_scenario_range():
    with pytest.raises(InvalidScenarioError):
        Scenario([Party.D], -0.1)
    with pytest.raises(InvalidScenarioError):
        Scenario([Party.D], 0.8)
    assert Scenario([Party.D], R_MAX + 1e-13).r == R_MAX
    assert Scenario([Party.C, Party.D], 0.2).name == 'CD'
    assert Scenario([], 0.2).name == 'none'


def test_expanded_register(w4):
    psi = unruh_expand(w4, Scenario([Party.D, Party.B], 0.3))
    assert psi.register.labels == ['A', 'B_I', 'B_II', 'C', 'D_I', 'D_II']


def test_expanded_terms(w4):
    r = 0.3
    psi = unruh_expand(w4, Scenario([Party.D], r))
    terms = dict(psi.nonzero_terms())
    assert len(terms) == 7
    assert terms['|1_A 0_B 0_C 0_D_I 0_D_II>'] == pytest.approx(0.5 * math.cos(r))
    assert terms['|1_A 0_B 0_C 1_D_I 1_D_II>'] == pytest.approx(0.5 * math.sin(r))
    assert terms['|0_A 0_B 0_C 1_D_I 0_D_II>'] == pytest.approx(0.5)
    assert len(unruh_expand(w4, Scenario([Party.D], 0)).nonzero_terms()) == 4


def test_expansion_needs_minkowski_slot():
    with pytest.raises(InvalidScenarioError):
        unruh_expand(w_state(2), Scenario([Party.D], 0.2))


@pytest.mark.parametrize('accelerated', NESTED_SCENARIOS[1:])
def test_expansion_preserves_norm(w4, accelerated):
    for r in np.linspace(0, R_MAX, 200):
        psi = unruh_expand(w4, Scenario(accelerated, r))
        assert abs(psi.norm - 1) <= 1e-12


def test_inertial_limit_matches_pure_density(w4):
    rho = physical_state(Scenario([Party.C, Party.D], 0))
    assert rho.register.labels == ['A', 'B', 'C_I', 'D_I']
    assert np.allclose(rho.matrix, pure_density(w4).matrix, atol=1e-12)


@pytest.mark.parametrize('accelerated', NESTED_SCENARIOS[1:])
def test_region_complementarity(w4, accelerated):
    psi = unruh_expand(w4, Scenario(accelerated, 0.5))
    physical = physical_density(psi)
    hidden = region_ii_density(psi)
    assert physical.purity == pytest.approx(hidden.purity, abs=1e-12)
    assert von_neumann_entropy(physical) == \
        pytest.approx(von_neumann_entropy(hidden), abs=1e-9)


def test_single_qubit_channel():
    r = 0.4
    psi = unruh_expand(w_state(2), Scenario([Party.B], r))
    rho_b = physical_density(psi)
    # B_I alone: vacuum weight 1/2 split into cos^2 and sin^2
    reduced = np.real(np.diag(rho_b.matrix.reshape(2, 2, 2, 2).trace(axis1=0, axis2=2)))
    assert reduced == pytest.approx([0.5 * math.cos(r) ** 2,
                                     0.5 + 0.5 * math.sin(r) ** 2])
