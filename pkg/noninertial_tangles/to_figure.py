"""Create plotly figures from sweep records."""

from typing import Iterable, List

import plotly.io as pio
import plotly.graph_objects as go
from plotly.graph_objects import Figure

from ._to_dataframe import records_to_dataframe
from .measures import MeasureRecord

# set white background in all charts
pio.templates.default = 'plotly_white'


def sweep_line_chart(records: Iterable[MeasureRecord], title: str = None,
                     show_title: bool = False) -> Figure:
    """Create a plotly line chart with one line per scenario, measure and subsystem.

    Args:
        records: MeasureRecord objects, usually the output of a sweep.
        title: A string to be used as the title of the plot. Defaults to None.
        show_title: A boolean to determine whether to show the title of the plot.
            Defaults to False.

    Returns:
        A plotly figure.
    """
    records: List[MeasureRecord] = list(records)
    assert records and all(isinstance(record, MeasureRecord) for record in records), \
        'Only a non-empty list of MeasureRecord is supported.'

    df = records_to_dataframe(records)
    measures = df['measure'].unique()

    fig = go.Figure(layout=go.Layout(margin=dict(l=20, r=20, t=33, b=20)))
    for (scenario, measure, subsystem), curve in df.groupby(
            ['scenario', 'measure', 'subsystem'], sort=True):
        curve = curve.sort_values('r')
        name = f'{subsystem} [{scenario}]' if len(measures) == 1 \
            else f'{measure} {subsystem} [{scenario}]'
        fig.add_trace(
            go.Scatter(
                x=curve['r'],
                y=curve['value'],
                name=name,
                mode='lines',
                hovertemplate=(
                    '<b>' + name + '</b><br>r: %{x:.4f}<br>value: %{y:.6f}'
                    + '<extra></extra>'
                ),
            )
        )

    # setting the title for the figure
    if show_title:
        fig_title = {
            'text': title if title else ', '.join(measures),
            'y': 1,
            'x': 0.5,
            'xanchor': 'center',
            'yanchor': 'top'
        }
    else:
        if title:
            raise ValueError(
                f'Title is set to "{title}" but show_title is set to False.')
        fig_title = None

    fig.update_xaxes(
        title_text='r (rad)',
        range=[0, df['r'].max()],
        showline=True,
        linewidth=1,
        linecolor="black",
        mirror=True,
    )
    fig.update_yaxes(
        title_text=measures[0] if len(measures) == 1 else 'value',
        showline=True,
        linewidth=1,
        linecolor="black",
        mirror=True,
    )

    fig.update_layout(
        legend=dict(orientation="h", yanchor="bottom", y=1.02, xanchor="right", x=1),
        template='plotly_white',
        title=fig_title
    )

    return fig
