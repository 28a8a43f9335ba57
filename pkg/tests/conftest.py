#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# @Time    : 2026/9/8
# @Author  : .*?
# @File    : conftest
# @Software: PyCharm
import numpy as np
import pytest

from setting.run_config import NoveltyConfig, RunConfig, Td3Config


@pytest.fixture
def small_td3() -> Td3Config:
    return Td3Config(
        state_dim=3,
        action_dim=2,
        action_bound=1.0,
        hidden_sizes=(8, 6),
        batch_size=16,
        replay_capacity=1000,
        warmup_steps=20,
        total_steps=60,
    )


@pytest.fixture
def tiny_run(tmp_path) -> RunConfig:
    """A pointmass run small enough for a unit test."""
    return RunConfig(
        env='pointmass',
        td3=Td3Config(hidden_sizes=(16, 16), batch_size=16, warmup_steps=30, total_steps=80),
        novelty=NoveltyConfig(),
        seeds=[0],
        eval_every=40,
        eval_episodes=1,
        output_dir=str(tmp_path),
    )


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(1234)
