#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# @Time    : 2026/9/8
# @Author  : .*?
# @File    : test_replay_buffer
# @Software: PyCharm
import numpy as np
import pytest
from scipy import stats

from agent.replay_buffer import ReplayBuffer
from domain.entity.transition import Transition
from exception.exception import NonFiniteException, ShapeMismatchException


def transition(k: float, done: bool = False) -> Transition:
    return Transition(np.full(2, k), np.array([k]), k, np.full(2, k + 1), done)


class TestReplayBuffer:
    def test_ring_overwrites_oldest(self):
        buffer = ReplayBuffer(capacity=3, state_dim=2, action_dim=1)
        for k in range(5):
            buffer.add(transition(float(k)))
        assert len(buffer) == 3
        assert sorted(buffer.rewards.tolist()) == [2.0, 3.0, 4.0]
        assert buffer.cursor == 2

    def test_sample_contents(self, rng):
        buffer = ReplayBuffer(capacity=10, state_dim=2, action_dim=1)
        buffer.add(transition(7.0, done=True))
        batch = buffer.sample(4, rng)
        assert len(batch) == 4
        assert batch.rewards.tolist() == [7.0] * 4
        assert batch.dones.tolist() == [1.0] * 4
        assert batch.next_states.tolist() == [[8.0, 8.0]] * 4

    def test_uniform_sampling(self):
        buffer = ReplayBuffer(capacity=100, state_dim=2, action_dim=1)
        for k in range(100):
            buffer.add(transition(float(k)))
        draws = buffer.sample_indices(100_000, np.random.default_rng(0))
        counts = np.bincount(draws, minlength=100)
        assert stats.chisquare(counts).pvalue > 0.001

    def test_samples_only_filled_slots(self, rng):
        buffer = ReplayBuffer(capacity=1000, state_dim=2, action_dim=1)
        for k in range(10):
            buffer.add(transition(float(k)))
        assert buffer.sample_indices(5000, rng).max() < 10

    def test_empty_sample(self, rng):
        with pytest.raises(ValueError):
            ReplayBuffer(capacity=4, state_dim=2, action_dim=1).sample(1, rng)

    def test_validation(self):
        buffer = ReplayBuffer(capacity=4, state_dim=2, action_dim=1)
        with pytest.raises(ShapeMismatchException):
            buffer.add(Transition(np.zeros(3), np.zeros(1), 0.0, np.zeros(2), False))
        with pytest.raises(ShapeMismatchException):
            buffer.add(Transition(np.zeros(2), np.zeros(2), 0.0, np.zeros(2), False))
        with pytest.raises(NonFiniteException):
            buffer.add(Transition(np.zeros(2), np.zeros(1), float('inf'), np.zeros(2), False))
