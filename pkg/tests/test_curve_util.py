#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# @Time    : 2026/9/8
# @Author  : .*?
# @File    : test_curve_util
# @Software: PyCharm
import pytest

from constants.constants import Constants
from domain.entity.learning_curve import EvalRecord, LearningCurve
from exception.exception import CommonException
from utils.curve_util import read_comparison_csv, read_curve_csv, write_curve_csv


class TestCurveCsv:
    def test_lossless(self, tmp_path):
        curve = LearningCurve(records=[
            EvalRecord(step=0, mean_eval_return=-123.45678901234567, cumulative_env_reward=0.0,
                       novel_state_count=0, cumulative_exploration_reward=0.0),
            EvalRecord(step=250, mean_eval_return=1 / 3, cumulative_env_reward=-2e-17,
                       novel_state_count=12, cumulative_exploration_reward=8.912345678901234),
        ])
        path = write_curve_csv(curve, tmp_path / 'nested' / 'curve.csv')
        text = path.read_text(encoding='utf-8')
        assert text.splitlines()[0] == ','.join(Constants.Csv.CURVE_COLUMNS)
        assert '\r' not in text
        assert read_curve_csv(path) == curve

    def test_wrong_header(self, tmp_path):
        path = tmp_path / 'other.csv'
        path.write_text('a,b\n1,2\n', encoding='utf-8')
        with pytest.raises(CommonException):
            read_curve_csv(path)
        with pytest.raises(CommonException):
            read_comparison_csv(path)

    def test_order_enforced(self):
        with pytest.raises(ValueError):
            LearningCurve(records=[
                EvalRecord(step=10, mean_eval_return=0, cumulative_env_reward=0,
                           novel_state_count=0, cumulative_exploration_reward=0),
                EvalRecord(step=10, mean_eval_return=0, cumulative_env_reward=0,
                           novel_state_count=0, cumulative_exploration_reward=0),
            ])
