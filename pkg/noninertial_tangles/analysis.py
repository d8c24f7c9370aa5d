"""Acceleration sweeps, sudden-death thresholds, presets and verification reports."""

from __future__ import annotations

import logging
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable, Dict, FrozenSet, Iterable, List, Optional, Sequence, \
    Tuple, Union

import numpy as np

from ._to_dataframe import dataframe_to_csv, records_to_dataframe
from .closed_form import VerificationReport, closed_form_one_one, verify_closed_forms
from .errors import InvalidConfigError, NoSignChangeError
from .measures import MeasureRecord, default_subsystems, measure_records, \
    measure_value, parse_subsystem, subsystem_label
from .unruh import Scenario
from .utils import NESTED_SCENARIOS, PARTIES, R_MAX, R_TOLERANCE, FigurePreset, \
    Measure, Party, StateFamily, SweepConfig

_logger = logging.getLogger(__name__)

THRESHOLD_TOLERANCE = 1e-8
THRESHOLD_MAX_ITERATIONS = 200
VERIFY_GRID_POINTS = 50


@dataclass(frozen=True)
class ThresholdResult:
    """Root of a measure found by bisection.

    ``residual`` is the measure value at ``root``.
    """
    measure: str
    subsystem: str
    bracket: Tuple[float, float]
    root: float
    iterations: int
    residual: float


def _subsystems_for(
    measure: Measure, subsystems: Optional[Sequence[Tuple[Party, ...]]]
) -> List[Tuple[Party, ...]]:
    """Subsystems recorded for a measure, honoring an optional filter."""
    if not subsystems:
        return default_subsystems(measure)
    if measure in (Measure.one_three_tangle, Measure.residual_tangle):
        firsts = []
        for parties in subsystems:
            if parties[0] not in firsts:
                firsts.append(parties[0])
        return [(party,) for party in firsts]
    if measure is Measure.one_one_tangle:
        return [tuple(parties) for parties in subsystems if len(parties) == 2]
    if measure is Measure.entropy:
        return [tuple(parties) for parties in subsystems]
    return [PARTIES]


def _point_records(accelerated: FrozenSet[Party], r: float, measures: Sequence[Measure],
                   subsystems: Optional[Sequence[Tuple[Party, ...]]],
                   state: StateFamily) -> List[MeasureRecord]:
    """Every record of a sweep at one grid point. Runs inside worker processes."""
    scenario = Scenario(accelerated, r)
    records = []
    for measure in measures:
        records.extend(measure_records(
            measure, scenario, _subsystems_for(measure, subsystems), state))
    return records


def _sort_key(record: MeasureRecord):
    return record.scenario, record.measure, record.subsystem, record.r


def run_sweep(config: SweepConfig) -> List[MeasureRecord]:
    """Evaluate every measure of a config over its r grid.

    Args:
        config: A SweepConfig.

    Returns:
        One MeasureRecord per (scenario, r, measure, subsystem), sorted by scenario,
        measure, subsystem and r. The order does not depend on the worker count.
    """
    if not isinstance(config, SweepConfig):
        raise InvalidConfigError(f'Expected a SweepConfig. Instead got {type(config)}')
    _logger.info('Running sweep %s', config)

    tasks = [(accelerated, r) for accelerated in config.scenarios for r in config.r_grid]
    accelerated_sets = [task[0] for task in tasks]
    grid = [task[1] for task in tasks]
    count = len(tasks)
    arguments = (accelerated_sets, grid, [config.measures] * count,
                 [config.subsystems] * count, [config.state] * count)

    if config.workers > 1:
        chunk = max(1, count // (4 * config.workers))
        with ProcessPoolExecutor(max_workers=config.workers) as executor:
            batches = list(executor.map(_point_records, *arguments, chunksize=chunk))
    else:
        batches = list(map(_point_records, *arguments))

    records = [record for batch in batches for record in batch]
    records.sort(key=_sort_key)
    if config.output:
        emit_csv(records, config.output)
    return records


def emit_csv(records: Iterable[MeasureRecord], path) -> int:
    """Write records as CSV with the header scenario,r,measure,subsystem,value.

    Values are printed with 12 significant digits. I/O failures raise OSError.

    Args:
        records: MeasureRecord objects.
        path: A file path or an open text stream.

    Returns:
        The number of data rows.
    """
    return dataframe_to_csv(records_to_dataframe(records), path)


def _resolve_subsystem(
    subsystem: Union[str, Sequence[Party]], accelerated: Optional[Iterable[Party]]
) -> Tuple[List[Party], FrozenSet[Party]]:
    if isinstance(subsystem, str):
        parties, tagged = parse_subsystem(subsystem)
    else:
        parties = [Party(party) for party in subsystem]
        tagged = frozenset(parties)
    if accelerated is not None:
        tagged = frozenset(Party(party) for party in accelerated)
    return parties, tagged


def find_threshold(measure: Measure, subsystem: Union[str, Sequence[Party]],
                   bracket: Tuple[float, float],
                   accelerated: Optional[Iterable[Party]] = None,
                   state: StateFamily = StateFamily.w,
                   tolerance: float = THRESHOLD_TOLERANCE,
                   source: str = 'pipeline',
                   max_iterations: int = THRESHOLD_MAX_ITERATIONS) -> ThresholdResult:
    """Bisect the acceleration parameter at which a measure stops being positive.

    Args:
        measure: The Measure to bisect.
        subsystem: A subsystem label such as ``A_I(B_I)`` or a sequence of parties.
        bracket: (r_lo, r_hi) within [0, pi/4]. The measure must be positive at exactly
            one end.
        accelerated: Accelerated parties. Defaults to the ``_I`` tagged parties of a
            label, or every party of a sequence.
        state: The initial state family. (Default: StateFamily.w).
        tolerance: Bracket width at which bisection stops. (Default: 1e-8).
        source: ``pipeline`` for the numeric measure or ``closed_form`` for the
            unclamped closed-form 1-1 tangle. (Default: pipeline).
        max_iterations: Hard cap on the number of bisection steps. (Default: 200).

    Returns:
        A ThresholdResult.
    """
    measure = Measure(measure)
    lo, hi = (float(value) for value in bracket)
    if not 0 <= lo < hi <= R_MAX + R_TOLERANCE:
        raise InvalidConfigError(
            f'Bracket must satisfy 0 <= r_lo < r_hi <= pi/4. Instead got {bracket}')
    parties, tagged = _resolve_subsystem(subsystem, accelerated)

    if source == 'closed_form':
        if measure is not Measure.one_one_tangle or len(parties) != 2:
            raise InvalidConfigError('Closed-form thresholds exist for 1-1 tangles only.')
        count = len(tagged.intersection(parties))

        def value(r: float) -> float:
            return closed_form_one_one(r, count)
    elif source == 'pipeline':
        def value(r: float) -> float:
            return measure_value(measure, Scenario(tagged, r), parties, state)
    else:
        raise InvalidConfigError(
            f'Unknown threshold source "{source}". Use pipeline or closed_form.')

    label = subsystem_label(measure, Scenario(tagged, lo), parties)
    root, iterations = _bisect(value, lo, hi, tolerance, max_iterations, label)
    return ThresholdResult(measure.value, label, (lo, hi), root, iterations, value(root))


def _bisect(value: Callable[[float], float], lo: float, hi: float, tolerance: float,
            max_iterations: int, label: str) -> Tuple[float, int]:
    lo_positive, hi_positive = value(lo) > 0, value(hi) > 0
    if lo_positive == hi_positive:
        raise NoSignChangeError(
            f'{label} is {"positive" if lo_positive else "not positive"} at both ends of'
            f' [{lo}, {hi}].')

    iterations = 0
    while hi - lo > tolerance and iterations < max_iterations:
        mid = (lo + hi) / 2
        if (value(mid) > 0) == lo_positive:
            lo = mid
        else:
            hi = mid
        iterations += 1
        _logger.debug('Bisection step %d for %s: [%r, %r]', iterations, label, lo, hi)
    return (lo + hi) / 2, iterations


def verify_report(path: str,
                  points: int = VERIFY_GRID_POINTS) -> VerificationReport:
    """Write the closed-form verification report over an evenly spaced grid.

    Args:
        path: Path of the text report.
        points: Number of grid points on [0, pi/4]. (Default: 50).

    Returns:
        The VerificationReport. Its ``passed`` property is False when a corrected form
        deviates from the pipeline by more than 1e-8.
    """
    report = verify_closed_forms(np.linspace(0, R_MAX, points))
    with open(path, 'w', encoding='utf-8', newline='\n') as outf:
        outf.write(report.to_text())
    _logger.info('Wrote verification report to %s', path)
    return report


_PRESETS: Dict[FigurePreset, Tuple[Tuple[FrozenSet[Party], ...], List[Measure]]] = {
    FigurePreset.one_three_tangles: (NESTED_SCENARIOS[1:], [Measure.one_three_tangle]),
    FigurePreset.one_one_tangles: (NESTED_SCENARIOS[1:], [Measure.one_one_tangle]),
    FigurePreset.residual_tangles: (NESTED_SCENARIOS, [Measure.residual_tangle]),
    FigurePreset.whole_tangles: (NESTED_SCENARIOS, [Measure.pi4, Measure.big_pi4]),
    FigurePreset.whole_tangle_gap: (NESTED_SCENARIOS, [Measure.pi4_gap]),
    FigurePreset.entropies: (NESTED_SCENARIOS, [Measure.entropy]),
}


def preset_config(preset: FigurePreset, points: int = 200, workers: int = 1,
                  state: StateFamily = StateFamily.w) -> SweepConfig:
    """SweepConfig of a figure preset over the full range [0, pi/4]."""
    scenarios, measures = _PRESETS[FigurePreset(preset)]
    return SweepConfig(scenarios=list(scenarios), points=points, measures=measures,
                       state=state, workers=workers)


def run_preset(preset: FigurePreset, points: int = 200, workers: int = 1,
               state: StateFamily = StateFamily.w) -> List[MeasureRecord]:
    """Records of one figure preset."""
    return run_sweep(preset_config(preset, points, workers, state))


def write_presets(out_dir: str, points: int = 200, workers: int = 1,
                  presets: Optional[Iterable[FigurePreset]] = None,
                  state: StateFamily = StateFamily.w) -> Dict[FigurePreset, str]:
    """Write one CSV per figure preset into a folder.

    Args:
        out_dir: Target folder. It is created when missing.
        points: Grid points per sweep. (Default: 200).
        workers: Worker processes per sweep. (Default: 1).
        presets: Presets to write. Defaults to all of them.
        state: The initial state family. (Default: StateFamily.w).

    Returns:
        A dictionary of preset to CSV path.
    """
    os.makedirs(out_dir, exist_ok=True)
    paths = {}
    for preset in presets or list(FigurePreset):
        preset = FigurePreset(preset)
        path = os.path.join(out_dir, f'{preset.value}.csv')
        emit_csv(run_preset(preset, points, workers, state), path)
        paths[preset] = path
    return paths
