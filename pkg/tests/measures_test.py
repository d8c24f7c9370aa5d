import itertools
import math

import numpy as np
import pytest

from noninertial_tangles.errors import IdenticalPartiesError, PartyNotInRegisterError
from noninertial_tangles.measures import MeasureRecord, default_subsystems, \
    measure_records, measure_value, negativity, one_one_tangle, one_three_tangle, \
    parse_subsystem, reduce_to, residual_tangle, subsystem_entropy, subsystem_label, \
    tangle_set, trace_norm_negativity, von_neumann_entropy
from noninertial_tangles.unruh import Scenario, physical_state
from noninertial_tangles.utils import NESTED_SCENARIOS, PARTIES, R_MAX, Measure, \
    Party, StateFamily

A, B, C, D = PARTIES
INERTIAL_PAIR = (math.sqrt(2) - 1) / 2
SAMPLE_R = (0.2, 0.4, 0.6, R_MAX)


def test_bell_negativity(bell):
    assert negativity(bell, Party.A) == pytest.approx(1, abs=1e-12)
    assert negativity(bell, Party.B) == pytest.approx(1, abs=1e-12)


@pytest.mark.parametrize('accelerated', NESTED_SCENARIOS)
def test_negativity_forms_agree(accelerated):
    for r in (0.0, 0.3, R_MAX):
        rho = physical_state(Scenario(accelerated, r))
        for party in PARTIES:
            assert negativity(rho, party) == \
                pytest.approx(trace_norm_negativity(rho, party), abs=1e-10)
        for pair in itertools.combinations(PARTIES, 2):
            reduced = reduce_to(rho, pair)
            assert negativity(reduced, pair[0]) == \
                pytest.approx(trace_norm_negativity(reduced, pair[0]), abs=1e-10)


def test_inertial_constants(r_grid):
    for r in r_grid:
        for accelerated in ([], [C, D], [A, B, C, D]):
            scenario = Scenario(accelerated, r)
            inertial = [party for party in PARTIES if party not in accelerated]
            for pair in itertools.combinations(inertial, 2):
                assert one_one_tangle(scenario, pair) == \
                    pytest.approx(INERTIAL_PAIR, abs=1e-10)
                assert subsystem_entropy(scenario, pair) == pytest.approx(1, abs=1e-9)
            for triple in itertools.combinations(inertial, 3):
                assert subsystem_entropy(scenario, triple) == \
                    pytest.approx(0.811278, abs=1e-6)


def test_one_three_tangle_at_rest():
    for party in PARTIES:
        assert one_three_tangle(Scenario([], 0), party) == \
            pytest.approx(math.sqrt(3) / 2, abs=1e-10)


def test_pair_sudden_death():
    assert one_one_tangle(Scenario([A, B], R_MAX), (A, B)) == pytest.approx(0, abs=1e-10)
    assert one_one_tangle(Scenario([A, B], 0.6), (A, B)) == 0
    assert one_one_tangle(Scenario([A, B], 0.3), (A, B)) > 0
    # one accelerated member survives until infinite acceleration
    assert one_one_tangle(Scenario([A], 0.7), (A, B)) > 0
    assert one_one_tangle(Scenario([A], R_MAX), (A, B)) == pytest.approx(0, abs=1e-10)


def test_identical_parties():
    with pytest.raises(IdenticalPartiesError):
        one_one_tangle(Scenario([], 0.1), (A, A))
    with pytest.raises(IdenticalPartiesError):
        measure_value(Measure.one_one_tangle, Scenario([], 0.1), [A, B, C])


def test_spectator_independence():
    for r in (0.1, 0.5, R_MAX):
        alone = reduce_to(physical_state(Scenario([A], r)), (A, B))
        crowded = reduce_to(physical_state(Scenario([A, C, D], r)), (A, B))
        assert alone.register == crowded.register
        assert np.max(np.abs(alone.matrix - crowded.matrix)) <= 1e-12


@pytest.mark.parametrize('r', SAMPLE_R)
def test_permutation_symmetry(r):
    single = [one_three_tangle(Scenario([party], r), party) for party in PARTIES]
    assert max(single) - min(single) <= 1e-10
    rest = [one_three_tangle(Scenario([party], r), other)
            for party in PARTIES for other in PARTIES if other is not party]
    assert max(rest) - min(rest) <= 1e-10
    doubly = [one_one_tangle(Scenario(pair, r), pair)
              for pair in itertools.combinations(PARTIES, 2)]
    assert max(doubly) - min(doubly) <= 1e-10
    mixed = [one_one_tangle(Scenario([pair[1]], r), pair)
             for pair in itertools.permutations(PARTIES, 2)]
    assert max(mixed) - min(mixed) <= 1e-10


def test_one_three_tangles_stay_positive():
    for accelerated in NESTED_SCENARIOS:
        for party in PARTIES:
            assert one_three_tangle(Scenario(accelerated, R_MAX), party) > 0


@pytest.mark.parametrize('r', SAMPLE_R)
def test_one_three_tangle_decreases_with_accelerated_count(r):
    for party in PARTIES:
        values = [one_three_tangle(Scenario(accelerated, r), party)
                  for accelerated in NESTED_SCENARIOS]
        assert all(later <= earlier + 1e-12
                   for earlier, later in zip(values, values[1:]))
    assert one_three_tangle(Scenario([A, B, C, D], r), A) < \
        one_three_tangle(Scenario([], r), A)


@pytest.mark.parametrize('r', SAMPLE_R)
def test_total_entropy_increases_with_accelerated_count(r):
    values = [subsystem_entropy(Scenario(accelerated, r), PARTIES)
              for accelerated in NESTED_SCENARIOS]
    assert values[0] == pytest.approx(0, abs=1e-9)
    assert all(later > earlier for earlier, later in zip(values, values[1:]))


def test_residual_tangles_at_rest():
    expected = (6 * math.sqrt(2) - 6) / 4
    for party in PARTIES:
        assert residual_tangle(Scenario([], 0), party) == \
            pytest.approx(expected, abs=1e-9)
    tangles = tangle_set(Scenario([], 0))
    assert tangles.pi4 == pytest.approx(expected, abs=1e-9)
    assert tangles.big_pi4 == pytest.approx(expected, abs=1e-9)
    assert not tangles.clamped


def test_residual_tangle_by_hand():
    scenario = Scenario([C, D], 0.5)
    pairs = sum(one_one_tangle(scenario, (C, other)) ** 2 for other in (A, B, D))
    assert residual_tangle(scenario, C) == \
        pytest.approx(one_three_tangle(scenario, C) ** 2 - pairs, abs=1e-12)


@pytest.mark.parametrize('accelerated', NESTED_SCENARIOS)
def test_arithmetic_mean_bounds_geometric_mean(accelerated):
    for r in np.linspace(0, R_MAX, 9):
        tangles = tangle_set(Scenario(accelerated, r))
        assert tangles.residuals[A] == tangles.pi_a
        if not tangles.clamped:
            assert tangles.pi4 >= tangles.big_pi4 - 1e-12
            assert tangles.gap >= -1e-12


def test_gap_vanishes_when_everyone_accelerates():
    for r in (0.1, 0.4, R_MAX):
        assert tangle_set(Scenario(PARTIES, r)).gap == pytest.approx(0, abs=1e-12)


def test_pure_state_entropy(w4):
    assert subsystem_entropy(Scenario([], 0.3), PARTIES) == pytest.approx(0, abs=1e-9)
    assert von_neumann_entropy(reduce_to(physical_state(Scenario([], 0)), [A])) == \
        pytest.approx(0.811278, abs=1e-6)


def test_entropy_interior_maximum():
    grid = np.linspace(0, R_MAX, 101)
    for parties in ((A, B), (A, B, C)):
        values = [subsystem_entropy(Scenario(parties, r), parties) for r in grid]
        assert max(values[1:-1]) > max(values[0], values[-1])


def test_subsystem_labels():
    scenario = Scenario([D], 0.2)
    assert subsystem_label(Measure.one_three_tangle, scenario, [A]) == 'A(BCD_I)'
    assert subsystem_label(Measure.residual_tangle, scenario, [D]) == 'D_I(ABC)'
    assert subsystem_label(Measure.one_one_tangle, scenario, [D, A]) == 'D_I(A)'
    assert subsystem_label(Measure.entropy, scenario, [D, B]) == 'BD_I'
    assert subsystem_label(Measure.pi4, scenario, PARTIES) == 'ABCD_I'


def test_parse_subsystem():
    assert parse_subsystem('A_I(B_I)') == ([A, B], frozenset({A, B}))
    assert parse_subsystem('D_I(ABC)') == ([D, A, B, C], frozenset({D}))
    assert parse_subsystem('A, C') == ([A, C], frozenset())
    with pytest.raises(PartyNotInRegisterError):
        parse_subsystem('AX')
    with pytest.raises(PartyNotInRegisterError):
        parse_subsystem('')
    with pytest.raises(IdenticalPartiesError):
        parse_subsystem('AA')


def test_default_subsystems():
    assert len(default_subsystems(Measure.one_three_tangle)) == 4
    assert len(default_subsystems(Measure.one_one_tangle)) == 6
    assert len(default_subsystems(Measure.entropy)) == 11
    assert default_subsystems(Measure.pi4) == [PARTIES]


def test_measure_records():
    records = measure_records(Measure.one_one_tangle, Scenario([], 0.25),
                              [(A, B), (C, D)])
    assert records[0] == MeasureRecord('none', 0.25, 'one_one_tangle', 'A(B)',
                                       pytest.approx(INERTIAL_PAIR, abs=1e-12))
    assert [record.subsystem for record in records] == ['A(B)', 'C(D)']
    norm = measure_value(Measure.unruh_norm, Scenario(PARTIES, 0.7), PARTIES)
    assert norm == pytest.approx(1, abs=1e-12)


def test_ghz_pairs_are_separable():
    for r in (0.0, 0.3, R_MAX):
        for accelerated in ([], [A], [A, B]):
            assert one_one_tangle(Scenario(accelerated, r), (A, B),
                                  StateFamily.ghz) == 0
        assert one_three_tangle(Scenario([A, B], r), A, StateFamily.ghz) > 0
