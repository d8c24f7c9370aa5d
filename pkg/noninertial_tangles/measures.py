"""Entanglement measures of the shared state of accelerated and inertial observers.

Negativities are computed from the partial transpose of the physical density matrix,
residual tangles combine the 1-3 and 1-1 tangles of one party and the whole-system
averages pi4 and Pi4 combine the four residual tangles. Entropies are in bits.
"""

from __future__ import annotations

import itertools
import logging
import re
from dataclasses import dataclass
from typing import Dict, Iterable, List, Sequence, Tuple

import numpy as np

from .errors import IdenticalPartiesError, PartyNotInRegisterError
from .states import initial_state
from .tensor import DensityMatrix, hermitian_eigenvalues, partial_trace, \
    partial_transpose, trace_norm
from .unruh import Scenario, physical_state, unruh_expand
from .utils import PARTIES, Measure, Party, StateFamily, scenario_name, sort_parties

_logger = logging.getLogger(__name__)

# eigenvalues above -NEGATIVITY_FLOOR are round-off, not entanglement
NEGATIVITY_FLOOR = 1e-12
ENTROPY_FLOOR = 1e-12

_LABEL_TOKEN = re.compile(r'([ABCD])(_I)?')


@dataclass(frozen=True)
class MeasureRecord:
    """One computed quantity of a sweep."""
    scenario: str
    r: float
    measure: str
    subsystem: str
    value: float


@dataclass(frozen=True)
class TangleSet:
    """Residual tangles of the four parties and their whole-system averages.

    ``big_pi4`` uses max(pi, 0) for every factor. ``clamped`` is True when at least one
    residual tangle was negative and had to be clamped.
    """
    pi_a: float
    pi_b: float
    pi_c: float
    pi_d: float
    pi4: float
    big_pi4: float
    clamped: bool

    @property
    def residuals(self) -> Dict[Party, float]:
        return {Party.A: self.pi_a, Party.B: self.pi_b,
                Party.C: self.pi_c, Party.D: self.pi_d}

    @property
    def gap(self) -> float:
        """Get pi4 - Pi4."""
        return self.pi4 - self.big_pi4


def _slots_of(rho: DensityMatrix, parties: Iterable[Party]) -> List[int]:
    slots = []
    for party in parties:
        slots.extend(rho.register.party_indices(party))
    return slots


def reduce_to(rho: DensityMatrix, parties: Iterable[Party]) -> DensityMatrix:
    """Reduction of a density matrix onto every slot of the given parties."""
    return partial_trace(rho, _slots_of(rho, parties))


def negativity(rho: DensityMatrix, transposed_party: Party) -> float:
    """Twice the absolute sum of the negative eigenvalues of a partial transpose.

    Args:
        rho: A DensityMatrix.
        transposed_party: The party whose slots are transposed.

    Returns:
        The negativity. Only eigenvalues below -1e-12 count as negative.
    """
    transposed = partial_transpose(rho, rho.register.party_indices(transposed_party))
    values = hermitian_eigenvalues(transposed)
    negative = values[values < -NEGATIVITY_FLOOR]
    return float(2 * np.sum(np.abs(negative)))


def trace_norm_negativity(rho: DensityMatrix, transposed_party: Party) -> float:
    """Negativity as trace norm of the partial transpose minus one."""
    transposed = partial_transpose(rho, rho.register.party_indices(transposed_party))
    return trace_norm(transposed) - 1


def _pair_scenario(scenario: Scenario, parties: Iterable[Party]) -> Scenario:
    """Scenario restricted to the accelerated members of a subsystem.

    A reduced state only depends on the acceleration of its own members since the
    expansion acts as an isometry on each party separately.
    """
    return Scenario(scenario.accelerated.intersection(parties), scenario.r)


def one_three_tangle(scenario: Scenario, party: Party,
                     state: StateFamily = StateFamily.w) -> float:
    """Negativity of one party against the other three."""
    return negativity(physical_state(scenario, state), party)


def one_one_tangle(scenario: Scenario, pair: Tuple[Party, Party],
                   state: StateFamily = StateFamily.w) -> float:
    """Negativity of a two-party reduction, transposing the first member.

    Args:
        scenario: The acceleration Scenario.
        pair: Two distinct parties.
        state: The initial state family. (Default: StateFamily.w).

    Returns:
        The 1-1 tangle of the pair.
    """
    first, second = pair
    if first is second:
        raise IdenticalPartiesError(f'A pair needs two parties. Got {first.value} twice.')
    rho = physical_state(_pair_scenario(scenario, pair), state)
    return negativity(reduce_to(rho, pair), first)


def residual_tangle(scenario: Scenario, party: Party,
                    state: StateFamily = StateFamily.w) -> float:
    """Squared 1-3 tangle of a party minus its three squared 1-1 tangles."""
    others = [other for other in PARTIES if other is not party]
    pairs = sum(one_one_tangle(scenario, (party, other), state) ** 2 for other in others)
    return one_three_tangle(scenario, party, state) ** 2 - pairs


def tangle_set(scenario: Scenario, state: StateFamily = StateFamily.w) -> TangleSet:
    """Residual tangles of all four parties with arithmetic and geometric means."""
    residuals = [residual_tangle(scenario, party, state) for party in PARTIES]
    clamped = any(value < 0 for value in residuals)
    if clamped:
        _logger.debug('Negative residual tangle clamped for %s: %s', scenario, residuals)
    pi4 = sum(residuals) / 4
    big_pi4 = float(np.prod([max(value, 0.0) for value in residuals]) ** 0.25)
    return TangleSet(*residuals, pi4=pi4, big_pi4=big_pi4, clamped=clamped)


def von_neumann_entropy(rho: DensityMatrix) -> float:
    """Entropy -sum(lambda log2 lambda) over eigenvalues above 1e-12."""
    values = hermitian_eigenvalues(rho.matrix)
    values = values[values > ENTROPY_FLOOR]
    return max(float(-np.sum(values * np.log2(values))), 0.0)


def subsystem_entropy(scenario: Scenario, parties: Sequence[Party],
                      state: StateFamily = StateFamily.w) -> float:
    """Entropy of the reduction onto a set of parties."""
    rho = physical_state(_pair_scenario(scenario, parties), state)
    if len(set(parties)) == len(rho.register.parties):
        return von_neumann_entropy(rho)
    return von_neumann_entropy(reduce_to(rho, sort_parties(set(parties))))


def _tag(party: Party, scenario: Scenario) -> str:
    return f'{party.value}_I' if scenario.is_accelerated(party) else party.value


def subsystem_label(measure: Measure, scenario: Scenario,
                    parties: Sequence[Party]) -> str:
    """Label of a subsystem with ``_I`` on accelerated members.

    Negativity-type measures read ``A(BCD_I)``: the transposed party first and the rest
    in brackets. Entropy and whole-system measures list the members, e.g. ``A_IB_I``.
    """
    if measure in (Measure.one_three_tangle, Measure.residual_tangle):
        first = parties[0]
        rest = [party for party in PARTIES if party is not first]
        return _tag(first, scenario) + '(' + \
            ''.join(_tag(party, scenario) for party in rest) + ')'
    if measure is Measure.one_one_tangle:
        return f'{_tag(parties[0], scenario)}({_tag(parties[1], scenario)})'
    return ''.join(_tag(party, scenario) for party in sort_parties(parties))


def parse_subsystem(label: str) -> Tuple[List[Party], frozenset]:
    """Parties of a subsystem label in order of appearance and the tagged ones.

    Brackets, commas, bars and spaces are ignored so ``A_I(B_I)``, ``A_I,B_I`` and
    ``A_I B_I`` are all the same pair.
    """
    stripped = re.sub(r'[()|,\s]', '', label)
    parties, tagged, position = [], set(), 0
    for match in _LABEL_TOKEN.finditer(stripped):
        if match.start() != position:
            break
        party = Party(match.group(1))
        if party in parties:
            raise IdenticalPartiesError(f'Party {party.value} appears twice in "{label}"')
        parties.append(party)
        if match.group(2):
            tagged.add(party)
        position = match.end()
    if not parties or position != len(stripped):
        raise PartyNotInRegisterError(
            f'Cannot read subsystem "{label}". Use letters A-D with an optional _I.')
    return parties, frozenset(tagged)


def default_subsystems(measure: Measure) -> List[Tuple[Party, ...]]:
    """Subsystems a sweep records for a measure when no filter is given."""
    if measure in (Measure.one_three_tangle, Measure.residual_tangle):
        return [(party,) for party in PARTIES]
    if measure is Measure.one_one_tangle:
        return list(itertools.combinations(PARTIES, 2))
    if measure is Measure.entropy:
        return [PARTIES] + list(itertools.combinations(PARTIES, 3)) + \
            list(itertools.combinations(PARTIES, 2))
    return [PARTIES]


def measure_value(measure: Measure, scenario: Scenario, parties: Sequence[Party],
                  state: StateFamily = StateFamily.w) -> float:
    """Evaluate any measure for a subsystem.

    Args:
        measure: The Measure to evaluate.
        scenario: The acceleration Scenario.
        parties: The subsystem. For 1-3 and residual tangles only the first party is
            used. For 1-1 tangles exactly two parties are expected.
        state: The initial state family. (Default: StateFamily.w).

    Returns:
        The value of the measure.
    """
    if measure is Measure.one_three_tangle:
        return one_three_tangle(scenario, parties[0], state)
    if measure is Measure.residual_tangle:
        return residual_tangle(scenario, parties[0], state)
    if measure is Measure.one_one_tangle:
        if len(parties) != 2:
            raise IdenticalPartiesError(
                f'A 1-1 tangle needs exactly two parties. Instead got {len(parties)}')
        return one_one_tangle(scenario, (parties[0], parties[1]), state)
    if measure is Measure.entropy:
        return subsystem_entropy(scenario, parties, state)
    if measure is Measure.unruh_norm:
        return unruh_expand(initial_state(state), scenario).norm
    tangles = tangle_set(scenario, state)
    if measure is Measure.pi4:
        return tangles.pi4
    if measure is Measure.big_pi4:
        return tangles.big_pi4
    return tangles.gap


def measure_records(measure: Measure, scenario: Scenario,
                    subsystems: Iterable[Sequence[Party]],
                    state: StateFamily = StateFamily.w) -> List[MeasureRecord]:
    """Records of one measure for several subsystems at one grid point."""
    return [
        MeasureRecord(scenario_name(scenario.accelerated), scenario.r, measure.value,
                      subsystem_label(measure, scenario, parties),
                      measure_value(measure, scenario, parties, state) + 0.0)
        for parties in subsystems
    ]
