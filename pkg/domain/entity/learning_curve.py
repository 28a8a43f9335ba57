#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# @Time    : 2026/9/4
# @Author  : .*?
# @File    : learning_curve
# @Software: PyCharm
from typing import List

from pydantic import BaseModel, Field, model_validator


class EvalRecord(BaseModel):
    step: int = Field(ge=0)
    mean_eval_return: float
    cumulative_env_reward: float
    novel_state_count: int = Field(ge=0)
    cumulative_exploration_reward: float = Field(ge=0)


class LearningCurve(BaseModel):
    records: List[EvalRecord] = Field(default_factory=list)

    @model_validator(mode='after')
    def check_order(self):
        for prev, cur in zip(self.records, self.records[1:]):
            self._check_pair(prev, cur)
        return self

    @staticmethod
    def _check_pair(prev: EvalRecord, cur: EvalRecord) -> None:
        if cur.step <= prev.step:
            raise ValueError(f'Evaluation steps must increase strictly: {prev.step} then {cur.step}')
        if cur.novel_state_count < prev.novel_state_count:
            raise ValueError('Novel state count must not decrease')

    def append(self, record: EvalRecord) -> None:
        if self.records:
            self._check_pair(self.records[-1], record)
        self.records.append(record)

    @property
    def steps(self) -> List[int]:
        return [record.step for record in self.records]

    @property
    def returns(self) -> List[float]:
        return [record.mean_eval_return for record in self.records]

    @property
    def final(self) -> EvalRecord:
        return self.records[-1]
