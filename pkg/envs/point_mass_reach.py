#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# @Time    : 2026/9/5
# @Author  : .*?
# @File    : point_mass_reach
# @Software: PyCharm
"""2-D point mass pushed towards a goal.

Observation: [px, py, vx, vy, gx, gy]. Action: 2-D force in [-1, 1].
Reward: -distance to goal after the step, +5 and done within 0.05 of the goal.
Per-step reward lies in [-4*sqrt(2), 5].
"""
from typing import Tuple

import numpy as np

from domain.entity.env_spec import EnvSpec
from domain.enums.env_name import EnvName
from envs.base_env import BaseEnv
from envs.env_factory import EnvFactory

DT = 0.05
DAMPING = 1.0
POSITION_LIMIT = 2.0
GOAL_RADIUS_RANGE = (0.5, 1.5)
SUCCESS_RADIUS = 0.05
SUCCESS_BONUS = 5.0


@EnvFactory.register(EnvName.POINTMASS)
class PointMassReach(BaseEnv):
    spec = EnvSpec(name=EnvName.POINTMASS, state_dim=6, action_dim=2, action_bound=1.0, episode_horizon=200)

    def __init__(self):
        super().__init__()
        self.position = np.zeros(2)
        self.velocity = np.zeros(2)
        self.goal = np.zeros(2)

    def _reset_state(self, rng: np.random.Generator) -> None:
        self.position = np.zeros(2)
        self.velocity = np.zeros(2)
        radius = rng.uniform(*GOAL_RADIUS_RANGE)
        angle = rng.uniform(-np.pi, np.pi)
        self.goal = radius * np.array([np.cos(angle), np.sin(angle)])

    def _advance(self, action: np.ndarray) -> Tuple[float, bool]:
        self.velocity = self.velocity + DT * (action - DAMPING * self.velocity)
        moved = self.position + DT * self.velocity
        self.position = np.clip(moved, -POSITION_LIMIT, POSITION_LIMIT)
        # a wall absorbs the velocity component pointing into it
        self.velocity = np.where(moved != self.position, 0.0, self.velocity)
        distance = self.goal_distance
        if distance <= SUCCESS_RADIUS:
            return -distance + SUCCESS_BONUS, True
        return -distance, False

    @property
    def goal_distance(self) -> float:
        return float(np.linalg.norm(self.goal - self.position))

    def _observe(self) -> np.ndarray:
        return np.concatenate([self.position, self.velocity, self.goal])
