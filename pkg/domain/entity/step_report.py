#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# @Time    : 2026/9/4
# @Author  : .*?
# @File    : step_report
# @Software: PyCharm
from typing import Optional

from pydantic import BaseModel, Field


class StepReport(BaseModel):
    step: int = Field(description='Environment step counter t after this step')
    env_reward: float
    bonus: float = Field(default=0.0, description='Exploration bonus added to the stored reward')
    novel: bool = Field(default=False, description='s\' was accepted by the detector or the passive monitor')
    done: bool = Field(default=False, description='Episode ended and the environment was reset')
    critic_losses: Optional[tuple[float, float]] = Field(default=None, description='None before training starts')
    actor_objective: Optional[float] = Field(default=None, description='None on delayed steps')
