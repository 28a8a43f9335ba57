#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# @Time    : 2026/9/4
# @Author  : .*?
# @File    : novelty_detector
# @Software: PyCharm
"""Distance-threshold novelty detection with a decaying exploration bonus.

A state is novel when its Euclidean distance to the nearest remembered state is at least
``epsilon``. The n-th novel state (counting from zero) earns ``r_max * decay ** n``.
Remembered states form a FIFO of at most ``max_states`` entries.

Evicting a state does not rebuild the index on the spot: the evicted point is removed from the
index (the k-d tree only marks it deleted) and the index is rebuilt from the live states every
``rebuild_every`` novel states. Queries stay exact in between because deleted points are never
returned.
"""
from __future__ import annotations

from collections import deque
from typing import Any, Deque, Dict, List, Tuple

import numpy as np
from loguru import logger

from exception.exception import ShapeMismatchException
from extensions.neighbor.base_neighbor import BaseNeighborIndex
from extensions.neighbor.ext_neighbor import get_neighbor_factory
from setting.run_config import NoveltyConfig


class NoveltyDetector:

    def __init__(self, config: NoveltyConfig):
        if config.state_dim is None:
            raise ValueError('NoveltyConfig.state_dim must be set before building a detector')
        self.config = config
        self.buffer: Deque[Tuple[int, np.ndarray]] = deque()
        self.index: BaseNeighborIndex = get_neighbor_factory(config.index)(config.state_dim)
        self.novel_count = 0
        self.reward_sum = 0.0
        self._since_rebuild = 0

    @property
    def states(self) -> List[np.ndarray]:
        """Remembered states, oldest first."""
        return [state for _, state in self.buffer]

    def __len__(self) -> int:
        return len(self.buffer)

    def _check_state(self, state: np.ndarray) -> np.ndarray:
        state = np.asarray(state, dtype=np.float64)
        if state.shape != (self.config.state_dim,):
            raise ShapeMismatchException(
                f'Expected a state of dimension {self.config.state_dim}, got shape {state.shape}'
            )
        return state

    def novelty_check(self, state: np.ndarray) -> bool:
        state = self._check_state(state)
        neighbor = self.index.nearest(state)
        return neighbor is None or neighbor.distance >= self.config.epsilon

    def exploration_reward(self) -> float:
        return self.config.r_max * self.config.decay ** self.novel_count

    def cumulative_exploration_reward(self) -> float:
        return self.reward_sum

    def record_state(self, state: np.ndarray) -> float:
        """Remember ``state`` and return its bonus if it is novel, otherwise return 0."""
        state = self._check_state(state)
        if not self.novelty_check(state):
            return 0.0
        reward = self.exploration_reward()
        point_id = self.novel_count
        self.buffer.append((point_id, state.copy()))
        if len(self.buffer) > self.config.max_states:
            evicted_id, _ = self.buffer.popleft()
            self.index.remove(evicted_id)
        self.index.insert(state, point_id)
        self._since_rebuild += 1
        # periodic rebuild rebalances the tree and drops removed nodes
        if self._since_rebuild >= self.config.rebuild_every:
            self._rebuild()
        self.novel_count += 1
        self.reward_sum += reward
        return reward

    def _rebuild(self) -> None:
        ids = [point_id for point_id, _ in self.buffer]
        self.index = get_neighbor_factory(self.config.index).build(self.states, ids)
        if self.index.dim is None:
            self.index.dim = self.config.state_dim
        self._since_rebuild = 0
        logger.trace(f"Rebuilt {self.config.index} index over {len(self.buffer)} states")

    def state_dict(self) -> Dict[str, Any]:
        ids = np.array([point_id for point_id, _ in self.buffer], dtype=np.int64)
        states = (np.vstack(self.states) if self.buffer
                  else np.empty((0, self.config.state_dim), dtype=np.float64))
        return {
            'config': self.config.model_dump(mode='json'),
            'novel_count': self.novel_count,
            'reward_sum': self.reward_sum,
            'ids': ids,
            'states': states,
        }

    def load_state_dict(self, state: Dict[str, Any]) -> None:
        """Replace memory and counters; FIFO order and insertion ids are preserved."""
        config = NoveltyConfig.model_validate(state['config'])
        if config.state_dim != self.config.state_dim:
            raise ShapeMismatchException(
                f'Saved detector has state_dim {config.state_dim}, this one {self.config.state_dim}'
            )
        ids = [int(point_id) for point_id in state['ids']]
        states = np.asarray(state['states'], dtype=np.float64)
        if ids and states.shape != (len(ids), config.state_dim):
            raise ShapeMismatchException(f'Detector states {states.shape} do not match {len(ids)} ids')
        self.config = config
        self.buffer = deque((point_id, row.copy()) for point_id, row in zip(ids, states))
        self.novel_count = int(state['novel_count'])
        self.reward_sum = float(state['reward_sum'])
        self._rebuild()

    @classmethod
    def from_state_dict(cls, state: Dict[str, Any]) -> NoveltyDetector:
        detector = cls(NoveltyConfig.model_validate(state['config']))
        detector.load_state_dict(state)
        return detector
