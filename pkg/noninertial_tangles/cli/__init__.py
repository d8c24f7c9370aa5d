"""noninertial-tangles command line interface.

Exit codes: 0 success, 1 invalid arguments, 2 verification failure, 3 I/O failure.
"""

import logging
import sys

import click

from ..analysis import emit_csv, find_threshold, run_sweep, verify_report, \
    write_presets
from ..errors import TangleError
from ..measures import measure_value, parse_subsystem, subsystem_label
from ..states import initial_state
from ..unruh import Scenario, unruh_expand
from ..utils import R_MAX, FigurePreset, Measure, StateFamily, SweepConfig, \
    parse_parties

_logger = logging.getLogger(__name__)

EXIT_INVALID = 1
EXIT_VERIFICATION = 2
EXIT_IO = 3

_MEASURES = click.Choice([measure.value for measure in Measure])
_STATES = click.Choice([family.value for family in StateFamily])
_PRESETS = click.Choice([preset.value for preset in FigurePreset] + ['all'])


class _TangleGroup(click.Group):
    """Click group that exits with 1 on usage errors instead of click's 2."""

    def main(self, *args, **kwargs):
        kwargs.pop('standalone_mode', None)
        try:
            return super().main(*args, standalone_mode=False, **kwargs)
        except click.ClickException as error:
            error.show()
            sys.exit(EXIT_INVALID)
        except click.Abort:
            click.echo('Aborted!', err=True)
            sys.exit(EXIT_INVALID)


def _fail(message: str, code: int) -> None:
    _logger.debug(message, exc_info=True)
    click.echo(message, err=True)
    sys.exit(code)


@click.group(cls=_TangleGroup)
@click.version_option()
@click.option('--verbose', '-v', is_flag=True, default=False,
              help='Print debug logs to stderr.')
def main(verbose):
    if verbose:
        logging.basicConfig(level=logging.DEBUG)


@main.command('sweep')
@click.option('--accelerated', '-a', multiple=True,
              help='Accelerated parties of one scenario, e.g. C,D or none. Repeat for'
              ' several scenarios. Defaults to the nested chain none, D, CD, BCD, ABCD.')
@click.option('--preset', '-p', type=_PRESETS, default=None,
              help='Write the CSV of a figure preset, or of all presets, into the --out'
              ' folder. Ignores --accelerated, --measure and --subsystem.')
@click.option('--measure', '-m', type=_MEASURES, multiple=True,
              help='Measure to record. Repeat for several. Defaults to all measures.')
@click.option('--subsystem', '-s', multiple=True,
              help='Subsystem label such as A(BCD) or A,B. Repeat for several.')
@click.option('--r-min', type=float, default=0.0, show_default=True,
              help='Lower end of the acceleration parameter grid.')
@click.option('--r-max', type=float, default=R_MAX, show_default=True,
              help='Upper end of the acceleration parameter grid.')
@click.option('--grid', '-g', type=int, default=200, show_default=True,
              help='Number of grid points.')
@click.option('--workers', '-w', type=int, default=1, show_default=True,
              help='Number of worker processes.')
@click.option('--state', type=_STATES, default='w', show_default=True,
              help='Initial state family.')
@click.option('--out', '-o', default=None,
              help='Output CSV path, or output folder for --preset. CSV is printed to'
              ' stdout when not set.')
def sweep(accelerated, preset, measure, subsystem, r_min, r_max, grid, workers, state,
          out):
    """Sweep measures over the acceleration parameter and write plot-ready CSV."""
    try:
        family = StateFamily(state)
        if preset:
            presets = list(FigurePreset) if preset == 'all' else [FigurePreset(preset)]
            paths = write_presets(out or '.', grid, workers, presets, family)
            for path in paths.values():
                click.echo(path)
            sys.exit(0)

        config = SweepConfig(
            scenarios=[parse_parties(item) for item in accelerated] or None,
            r_min=r_min, r_max=r_max, points=grid,
            measures=[Measure(item) for item in measure] or None,
            subsystems=[tuple(parse_subsystem(item)[0]) for item in subsystem] or None,
            state=family, workers=workers)
        records = run_sweep(config)
        emit_csv(records, out if out else sys.stdout)
    except TangleError as error:
        _fail(f'Sweep failed. {error}', EXIT_INVALID)
    except OSError as error:
        _fail(f'Failed to write CSV. {error}', EXIT_IO)
    else:
        sys.exit(0)


@main.command('threshold')
@click.option('--measure', '-m', type=_MEASURES, default='one_one_tangle',
              show_default=True, help='Measure to bisect.')
@click.option('--subsystem', '-s', default='A_I(B_I)', show_default=True,
              help='Subsystem label. Parties tagged _I are accelerated.')
@click.option('--bracket', '-b', type=float, nargs=2, default=(0.3, 0.6),
              show_default=True, help='Bracket r_lo r_hi.')
@click.option('--accelerated', '-a', default=None,
              help='Accelerated parties. Overrides the _I tags of --subsystem.')
@click.option('--state', type=_STATES, default='w', show_default=True,
              help='Initial state family.')
@click.option('--tolerance', '-t', type=float, default=1e-8, show_default=True,
              help='Bracket width at which bisection stops.')
@click.option('--source', type=click.Choice(['pipeline', 'closed_form']),
              default='pipeline', show_default=True,
              help='Numeric pipeline or the unclamped closed-form 1-1 tangle.')
def threshold(measure, subsystem, bracket, accelerated, state, tolerance, source):
    """Find the acceleration parameter at which a measure dies out."""
    try:
        result = find_threshold(
            Measure(measure), subsystem, tuple(bracket),
            accelerated=parse_parties(accelerated) if accelerated is not None else None,
            state=StateFamily(state), tolerance=tolerance, source=source)
    except TangleError as error:
        _fail(f'Threshold search failed. {error}', EXIT_INVALID)
    else:
        click.echo(f'measure: {result.measure}')
        click.echo(f'subsystem: {result.subsystem}')
        click.echo(f'bracket: [{result.bracket[0]:.12g}, {result.bracket[1]:.12g}]')
        click.echo(f'root: {result.root:.12g}')
        click.echo(f'iterations: {result.iterations}')
        click.echo(f'residual: {result.residual:.12g}')
        sys.exit(0)


@main.command('verify')
@click.option('--out', '-o', default='verification_report.txt', show_default=True,
              help='Path of the text report.')
@click.option('--grid', '-g', type=int, default=50, show_default=True,
              help='Number of grid points on [0, pi/4].')
def verify(out, grid):
    """Compare the closed-form tangles and spectra with the numeric pipeline."""
    try:
        report = verify_report(out, grid)
    except OSError as error:
        _fail(f'Failed to write the report. {error}', EXIT_IO)
    except TangleError as error:
        _fail(f'Verification failed. {error}', EXIT_INVALID)
    else:
        click.echo(report.to_text(), nl=False)
        sys.exit(0 if report.passed else EXIT_VERIFICATION)


@main.command('state')
@click.option('--accelerated', '-a', default='none', show_default=True,
              help='Accelerated parties, e.g. C,D.')
@click.option('--r', '-r', 'r', type=float, default=0.0, show_default=True,
              help='Acceleration parameter.')
@click.option('--state', type=_STATES, default='w', show_default=True,
              help='Initial state family.')
def state(accelerated, r, state):
    """Print the nonzero amplitudes of the expanded state vector."""
    try:
        scenario = Scenario(parse_parties(accelerated), r)
        psi = unruh_expand(initial_state(StateFamily(state)), scenario)
    except TangleError as error:
        _fail(f'Failed to build the state. {error}', EXIT_INVALID)
    else:
        click.echo(f'scenario: {scenario.name}  r: {scenario.r:.12g}')
        click.echo(f'slots: {" ".join(psi.register.labels)}')
        for label, amplitude in psi.nonzero_terms():
            text = f'{amplitude.real:.12g}' if abs(amplitude.imag) < 1e-15 \
                else f'{amplitude:.12g}'
            click.echo(f'{text:>16}  {label}')
        sys.exit(0)


@main.command('measure')
@click.option('--measure', '-m', type=_MEASURES, required=True,
              help='Measure to evaluate.')
@click.option('--subsystem', '-s', default='ABCD', show_default=True,
              help='Subsystem label such as A(BCD) or A,B.')
@click.option('--accelerated', '-a', default='none', show_default=True,
              help='Accelerated parties, e.g. C,D.')
@click.option('--r', '-r', 'r', type=float, default=0.0, show_default=True,
              help='Acceleration parameter.')
@click.option('--state', type=_STATES, default='w', show_default=True,
              help='Initial state family.')
def measure(measure, subsystem, accelerated, r, state):
    """Evaluate one measure at a single acceleration parameter."""
    try:
        identifier = Measure(measure)
        scenario = Scenario(parse_parties(accelerated), r)
        parties, _ = parse_subsystem(subsystem)
        value = measure_value(identifier, scenario, parties, StateFamily(state))
        label = subsystem_label(identifier, scenario, parties)
    except TangleError as error:
        _fail(f'Measure failed. {error}', EXIT_INVALID)
    else:
        click.echo(f'{identifier.value} {label} [{scenario.name}] r={scenario.r:.12g}:'
                   f' {value:.12g}')
        sys.exit(0)
