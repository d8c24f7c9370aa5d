"""Objects to support noninertial-tangles analyses."""

from __future__ import annotations

import math
from enum import Enum
from typing import FrozenSet, Iterable, List, Optional, Tuple

from .errors import InvalidConfigError, PartyNotInRegisterError

# Largest acceleration parameter; r = pi/4 is infinite proper acceleration.
R_MAX = math.pi / 4
# Slack allowed on the upper end of r to absorb float round-off of pi/4.
R_TOLERANCE = 1e-12


class Party(Enum):
    """Observers sharing the entangled state in canonical order."""
    A = 'A'
    B = 'B'
    C = 'C'
    D = 'D'

    @property
    def order(self) -> int:
        return 'ABCD'.index(self.value)


PARTIES: Tuple[Party, ...] = tuple(Party)


class Region(Enum):
    """Spacetime region a mode slot lives in."""
    minkowski = 'M'
    region_i = 'I'
    region_ii = 'II'

    @property
    def order(self) -> int:
        return ('M', 'I', 'II').index(self.value)


class Measure(Enum):
    """Quantities a sweep can record."""
    one_three_tangle = 'one_three_tangle'
    one_one_tangle = 'one_one_tangle'
    residual_tangle = 'residual_tangle'
    pi4 = 'pi4'
    big_pi4 = 'big_pi4'
    pi4_gap = 'pi4_gap'
    entropy = 'entropy'
    unruh_norm = 'unruh_norm'


class StateFamily(Enum):
    """Initial Minkowski-frame states."""
    w = 'w'
    ghz = 'ghz'


class FigurePreset(Enum):
    """Plot-ready data sets, one CSV each."""
    one_three_tangles = 'one_three_tangles'
    one_one_tangles = 'one_one_tangles'
    residual_tangles = 'residual_tangles'
    whole_tangles = 'whole_tangles'
    whole_tangle_gap = 'whole_tangle_gap'
    entropies = 'entropies'


# none, {D}, {C,D}, {B,C,D}, {A,B,C,D}
NESTED_SCENARIOS: Tuple[FrozenSet[Party], ...] = tuple(
    frozenset(PARTIES[4 - count:]) for count in range(5))


def parse_parties(text: str) -> FrozenSet[Party]:
    """Parse a comma separated party list such as ``C,D``.

    The words ``none`` and an empty string both mean no party.
    """
    text = text.strip()
    if not text or text.lower() == 'none':
        return frozenset()
    parties = set()
    for item in text.replace(' ', '').split(','):
        if not item:
            continue
        try:
            parties.add(Party(item.upper()))
        except ValueError:
            raise PartyNotInRegisterError(
                f'Unknown party "{item}". Use letters from A, B, C and D.') from None
    return frozenset(parties)


def scenario_name(accelerated: Iterable[Party]) -> str:
    """Stable name of an accelerated set: sorted letters, ``none`` when empty."""
    letters = ''.join(sorted(party.value for party in accelerated))
    return letters if letters else 'none'


def sort_parties(parties: Iterable[Party]) -> List[Party]:
    return sorted(parties, key=lambda party: party.order)


class SweepConfig:
    """Parameters of an acceleration sweep.

    Args:
        scenarios: Accelerated party sets to sweep. Defaults to the nested chain
            none, {D}, {C,D}, {B,C,D}, {A,B,C,D}.
        r_min: Lower end of the acceleration parameter grid. (Default: 0).
        r_max: Upper end of the acceleration parameter grid. (Default: pi/4).
        points: Number of grid points including both ends. (Default: 200).
        measures: Measures to record. Defaults to every measure.
        subsystems: Optional list of party tuples. When set only subsystems made of
            these parties are recorded. (Default: None).
        state: Initial state family. (Default: StateFamily.w).
        workers: Number of worker processes for grid evaluation. (Default: 1).
        output: Optional path of the CSV file to write. (Default: None).
    """

    def __init__(self,
                 scenarios: Optional[List[FrozenSet[Party]]] = None,
                 r_min: float = 0.0,
                 r_max: float = R_MAX,
                 points: int = 200,
                 measures: Optional[List[Measure]] = None,
                 subsystems: Optional[List[Tuple[Party, ...]]] = None,
                 state: StateFamily = StateFamily.w,
                 workers: int = 1,
                 output: Optional[str] = None) -> None:

        self._scenarios = [frozenset(s) for s in scenarios] if scenarios is not None \
            else list(NESTED_SCENARIOS)
        self._r_min = float(r_min)
        self._r_max = float(r_max)
        self._points = points
        self._measures = list(measures) if measures is not None else list(Measure)
        self._subsystems = [tuple(s) for s in subsystems] if subsystems else None
        self._state = state
        self._workers = workers
        self._output = output
        self._validate()

    def _validate(self) -> None:
        if not self._scenarios:
            raise InvalidConfigError('At least one scenario is required.')
        for scenario in self._scenarios:
            if not all(isinstance(party, Party) for party in scenario):
                raise InvalidConfigError(
                    f'Scenarios must be sets of Party. Instead got {scenario}')
        if not 0 <= self._r_min < self._r_max <= R_MAX + R_TOLERANCE:
            raise InvalidConfigError(
                'Acceleration range must satisfy 0 <= r_min < r_max <= pi/4. Instead'
                f' got r_min={self._r_min} and r_max={self._r_max}')
        if not isinstance(self._points, int) or self._points < 2:
            raise InvalidConfigError(
                f'A sweep needs at least 2 points. Instead got {self._points}')
        if not self._measures or \
                not all(isinstance(measure, Measure) for measure in self._measures):
            raise InvalidConfigError(
                'Measures must be a non-empty list of Measure. Instead got'
                f' {self._measures}')
        if not isinstance(self._state, StateFamily):
            raise InvalidConfigError(
                f'State must be a StateFamily. Instead got {self._state}')
        if not isinstance(self._workers, int) or self._workers < 1:
            raise InvalidConfigError(
                f'Workers must be a positive integer. Instead got {self._workers}')

    def _update(self, name: str, value) -> None:
        previous = getattr(self, name)
        setattr(self, name, value)
        try:
            self._validate()
        except InvalidConfigError:
            setattr(self, name, previous)
            raise

    @property
    def scenarios(self) -> List[FrozenSet[Party]]:
        """Get the accelerated party sets."""
        return list(self._scenarios)

    @scenarios.setter
    def scenarios(self, value: List[FrozenSet[Party]]) -> None:
        """Set the accelerated party sets."""
        self._update('_scenarios', [frozenset(s) for s in value])

    @property
    def r_min(self) -> float:
        """Get the lower end of the r grid."""
        return self._r_min

    @r_min.setter
    def r_min(self, value: float) -> None:
        """Set the lower end of the r grid."""
        self._update('_r_min', float(value))

    @property
    def r_max(self) -> float:
        """Get the upper end of the r grid."""
        return self._r_max

    @r_max.setter
    def r_max(self, value: float) -> None:
        """Set the upper end of the r grid."""
        self._update('_r_max', float(value))

    @property
    def points(self) -> int:
        """Get the number of grid points."""
        return self._points

    @points.setter
    def points(self, value: int) -> None:
        """Set the number of grid points."""
        self._update('_points', value)

    @property
    def measures(self) -> List[Measure]:
        """Get the measures to record."""
        return list(self._measures)

    @measures.setter
    def measures(self, value: List[Measure]) -> None:
        """Set the measures to record."""
        self._update('_measures', list(value))

    @property
    def subsystems(self) -> Optional[List[Tuple[Party, ...]]]:
        """Get the subsystem filter."""
        return self._subsystems

    @subsystems.setter
    def subsystems(self, value: Optional[List[Tuple[Party, ...]]]) -> None:
        """Set the subsystem filter."""
        self._update('_subsystems', [tuple(s) for s in value] if value else None)

    @property
    def state(self) -> StateFamily:
        """Get the initial state family."""
        return self._state

    @state.setter
    def state(self, value: StateFamily) -> None:
        """Set the initial state family."""
        self._update('_state', value)

    @property
    def workers(self) -> int:
        """Get the number of worker processes."""
        return self._workers

    @workers.setter
    def workers(self, value: int) -> None:
        """Set the number of worker processes."""
        self._update('_workers', value)

    @property
    def output(self) -> Optional[str]:
        """Get the output CSV path."""
        return self._output

    @output.setter
    def output(self, value: Optional[str]) -> None:
        """Set the output CSV path."""
        self._output = value

    @property
    def r_grid(self) -> List[float]:
        """Get the evenly spaced r values of the sweep."""
        step = (self._r_max - self._r_min) / (self._points - 1)
        grid = [self._r_min + count * step for count in range(self._points - 1)]
        # pin the last point so pi/4 is hit exactly
        return grid + [self._r_max]

    def __str__(self) -> str:
        return f'SweepConfig(scenarios={[scenario_name(s) for s in self.scenarios]},'\
            f' r_min={self.r_min}, r_max={self.r_max}, points={self.points},' \
            f' measures={[m.value for m in self.measures]},'\
            f' state={self.state.value}, workers={self.workers},' \
            f' output={self.output})'
