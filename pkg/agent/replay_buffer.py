#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# @Time    : 2026/9/4
# @Author  : .*?
# @File    : replay_buffer
# @Software: PyCharm
import math

import numpy as np

from domain.entity.transition import Transition, TransitionBatch
from exception.exception import NonFiniteException, ShapeMismatchException


class ReplayBuffer:
    """Fixed-capacity ring buffer; once full, each insertion overwrites the oldest transition."""

    def __init__(self, capacity: int, state_dim: int, action_dim: int):
        if capacity <= 0:
            raise ValueError(f'capacity must be positive, got {capacity}')
        self.capacity = capacity
        self.state_dim = state_dim
        self.action_dim = action_dim
        self.states = np.zeros((capacity, state_dim), dtype=np.float64)
        self.actions = np.zeros((capacity, action_dim), dtype=np.float64)
        self.rewards = np.zeros(capacity, dtype=np.float64)
        self.next_states = np.zeros((capacity, state_dim), dtype=np.float64)
        self.dones = np.zeros(capacity, dtype=np.float64)
        self.cursor = 0
        self.size = 0

    def add(self, transition: Transition) -> None:
        if np.shape(transition.s) != (self.state_dim,) or np.shape(transition.s_next) != (self.state_dim,):
            raise ShapeMismatchException(f'Transition states must have length {self.state_dim}')
        if np.shape(transition.a) != (self.action_dim,):
            raise ShapeMismatchException(f'Transition action must have length {self.action_dim}')
        if not math.isfinite(transition.r):
            raise NonFiniteException(f'Transition reward is not finite: {transition.r}')
        k = self.cursor
        self.states[k] = transition.s
        self.actions[k] = transition.a
        self.rewards[k] = transition.r
        self.next_states[k] = transition.s_next
        self.dones[k] = float(transition.done)
        self.cursor = (k + 1) % self.capacity
        self.size = min(self.size + 1, self.capacity)

    def sample_indices(self, batch_size: int, rng: np.random.Generator) -> np.ndarray:
        if self.size == 0:
            raise ValueError('Cannot sample from an empty replay buffer')
        return rng.integers(0, self.size, size=batch_size)

    def sample(self, batch_size: int, rng: np.random.Generator) -> TransitionBatch:
        """Uniform sampling with replacement."""
        idx = self.sample_indices(batch_size, rng)
        return TransitionBatch(
            states=self.states[idx],
            actions=self.actions[idx],
            rewards=self.rewards[idx],
            next_states=self.next_states[idx],
            dones=self.dones[idx],
        )

    def __len__(self) -> int:
        return self.size
