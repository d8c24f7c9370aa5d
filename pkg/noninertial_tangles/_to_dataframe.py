"""Functions to turn measure records into pandas dataframes and CSV files."""

from __future__ import annotations

import logging
from dataclasses import astuple
from typing import Iterable

import pandas as pd

from .measures import MeasureRecord

_logger = logging.getLogger(__name__)

COLUMNS = ['scenario', 'r', 'measure', 'subsystem', 'value']
FLOAT_FORMAT = '%.12g'


def records_to_dataframe(records: Iterable[MeasureRecord]) -> pd.DataFrame:
    """Create a dataframe with one row per record.

    Args:
        records: MeasureRecord objects.

    Returns:
        A pandas dataframe with the columns scenario, r, measure, subsystem and value.
    """
    data_frame = pd.DataFrame([astuple(record) for record in records], columns=COLUMNS)
    data_frame['r'] = data_frame['r'].astype(float)
    data_frame['value'] = data_frame['value'].astype(float)
    return data_frame


def dataframe_to_csv(data_frame: pd.DataFrame, path) -> int:
    """Write a record dataframe as UTF-8 CSV with LF line endings.

    Returns:
        The number of data rows written.
    """
    try:
        data_frame.to_csv(path, index=False, float_format=FLOAT_FORMAT,
                          encoding='utf-8', lineterminator='\n')
    except TypeError:
        # pandas < 1.5
        data_frame.to_csv(path, index=False, float_format=FLOAT_FORMAT,
                          encoding='utf-8', line_terminator='\n')
    _logger.info('Wrote %d rows to %s', len(data_frame.index), path)
    return len(data_frame.index)
