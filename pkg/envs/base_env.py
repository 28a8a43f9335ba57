#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# @Time    : 2026/9/5
# @Author  : .*?
# @File    : base_env
# @Software: PyCharm
from __future__ import annotations

from abc import ABC, abstractmethod
from typing import ClassVar, NamedTuple, Optional, Tuple

import numpy as np

from domain.entity.env_spec import EnvSpec
from exception.exception import EnvironmentDoneException, ShapeMismatchException


class StepResult(NamedTuple):
    observation: np.ndarray
    reward: float
    done: bool
    truncated: bool = False


class BaseEnv(ABC):
    """Deterministic episodic task with a reset/step interface.

    ``reset(seed)`` reseeds the task sampler; ``reset()`` continues the current stream, so a
    trajectory is a pure function of the first seed and the action sequence.
    """

    spec: ClassVar[EnvSpec]

    def __init__(self):
        self._rng = np.random.default_rng(0)
        self._steps = 0
        self._done = True

    @abstractmethod
    def _reset_state(self, rng: np.random.Generator) -> None:
        raise NotImplementedError

    @abstractmethod
    def _advance(self, action: np.ndarray) -> Tuple[float, bool]:
        """Integrate one step; returns (reward, success)."""
        raise NotImplementedError

    @abstractmethod
    def _observe(self) -> np.ndarray:
        raise NotImplementedError

    def reset(self, seed: Optional[int] = None) -> np.ndarray:
        if seed is not None:
            self._rng = np.random.default_rng(seed)
        self._steps = 0
        self._done = False
        self._reset_state(self._rng)
        return self._observe()

    def step(self, action: np.ndarray) -> StepResult:
        if self._done:
            raise EnvironmentDoneException(f'{self.spec.name}: episode is over, call reset() first')
        action = np.asarray(action, dtype=np.float64)
        if action.shape != (self.spec.action_dim,):
            raise ShapeMismatchException(
                f'{self.spec.name}: expected an action of length {self.spec.action_dim}, got shape {action.shape}'
            )
        action = np.clip(action, -self.spec.action_bound, self.spec.action_bound)
        reward, success = self._advance(action)
        self._steps += 1
        truncated = not success and self._steps >= self.spec.episode_horizon
        self._done = success or truncated
        return StepResult(self._observe(), float(reward), self._done, truncated)

    @property
    def observation(self) -> np.ndarray:
        return self._observe()

    @property
    def done(self) -> bool:
        return self._done

    @property
    def steps(self) -> int:
        return self._steps
