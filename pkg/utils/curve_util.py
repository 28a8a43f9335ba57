#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# @Time    : 2026/9/6
# @Author  : .*?
# @File    : curve_util
# @Software: PyCharm
from pathlib import Path
from typing import Iterable

import pandas as pd

from constants.constants import Constants
from domain.entity.comparison_report import ComparisonRow
from domain.entity.learning_curve import EvalRecord, LearningCurve
from exception.exception import CommonException
from utils.path_util import PathUtil


def curve_to_frame(curve: LearningCurve) -> pd.DataFrame:
    frame = pd.DataFrame(
        [record.model_dump() for record in curve.records],
        columns=list(Constants.Csv.CURVE_COLUMNS),
    )
    return frame.astype({'step': 'int64', 'novel_state_count': 'int64'})


def _write(frame: pd.DataFrame, path: str | Path) -> Path:
    path = Path(path)
    PathUtil.check_or_make_dir(path.parent)
    try:
        frame.to_csv(
            path,
            index=False,
            float_format=Constants.Csv.FLOAT_FORMAT,
            encoding=Constants.Csv.ENCODING,
            lineterminator='\n',
        )
    except OSError as e:
        raise CommonException(f'Failed to write {path}: {e}') from e
    return path


def write_curve_csv(curve: LearningCurve, path: str | Path) -> Path:
    return _write(curve_to_frame(curve), path)


def read_curve_csv(path: str | Path) -> LearningCurve:
    try:
        frame = pd.read_csv(path, encoding=Constants.Csv.ENCODING, float_precision='round_trip')
    except OSError as e:
        raise CommonException(f'Failed to read {path}: {e}') from e
    if tuple(frame.columns) != Constants.Csv.CURVE_COLUMNS:
        raise CommonException(f'{path} does not have the learning-curve header {Constants.Csv.CURVE_COLUMNS}')
    return LearningCurve(records=[EvalRecord(**row) for row in frame.to_dict(orient='records')])


def write_comparison_csv(rows: Iterable[ComparisonRow], path: str | Path) -> Path:
    frame = pd.DataFrame([row.model_dump() for row in rows], columns=list(Constants.Csv.COMPARISON_COLUMNS))
    return _write(frame.astype({'step': 'int64'}), path)


def read_comparison_csv(path: str | Path) -> pd.DataFrame:
    try:
        frame = pd.read_csv(path, encoding=Constants.Csv.ENCODING, float_precision='round_trip')
    except OSError as e:
        raise CommonException(f'Failed to read {path}: {e}') from e
    if tuple(frame.columns) != Constants.Csv.COMPARISON_COLUMNS:
        raise CommonException(f'{path} does not have the comparison header {Constants.Csv.COMPARISON_COLUMNS}')
    return frame
