#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# @Time    : 2026/9/4
# @Author  : .*?
# @File    : run_config
# @Software: PyCharm
"""Experiment configuration: TD3 and novelty hyperparameters plus the run protocol."""
from __future__ import annotations

from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple

import yaml
from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator

from domain.entity.env_spec import EnvSpec
from domain.enums.env_name import EnvName
from domain.enums.neighbor_type import NeighborType
from exception.exception import (
    ConfigFileNotFoundException,
    ConfigRangeException,
    ConfigSyntaxException,
    UnknownConfigKeyException,
)
from setting.setting import get_eecl_td3_settings


class Td3Config(BaseModel):
    state_dim: Optional[int] = Field(default=None, gt=0)
    action_dim: Optional[int] = Field(default=None, gt=0)
    action_bound: Optional[float] = Field(default=None, gt=0)
    hidden_sizes: Tuple[int, ...] = Field(default=(400, 300), description='Hidden layer widths for actor and critics')
    discount: float = Field(default=0.99, ge=0, lt=1, description='TD discount')
    tau: float = Field(default=0.005, gt=0, le=1)
    policy_delay: int = Field(default=2, gt=0)
    batch_size: int = Field(default=128, gt=0)
    replay_capacity: int = Field(default=1_000_000, gt=0)
    actor_lr: float = Field(default=0.001, gt=0)
    critic_lr: float = Field(default=0.001, gt=0)
    critic_weight_decay: float = Field(default=0.005, ge=0)
    explore_sigma: float = Field(default=0.1, ge=0)
    smooth_sigma: float = Field(default=0.2, ge=0)
    smooth_clip: float = Field(default=0.5, gt=0)
    warmup_steps: int = Field(default=1000, ge=0)
    total_steps: int = Field(default=5000, ge=0)

    model_config = ConfigDict(extra='forbid')

    @field_validator('hidden_sizes')
    @classmethod
    def check_hidden_sizes(cls, value: Tuple[int, ...]) -> Tuple[int, ...]:
        if any(size <= 0 for size in value):
            raise ValueError('hidden layer widths must be positive')
        return value

    def for_env(self, spec: EnvSpec) -> Td3Config:
        return self.model_copy(update={
            'state_dim': self.state_dim or spec.state_dim,
            'action_dim': self.action_dim or spec.action_dim,
            'action_bound': self.action_bound or spec.action_bound,
        })

    @property
    def is_complete(self) -> bool:
        return None not in (self.state_dim, self.action_dim, self.action_bound)


class NoveltyConfig(BaseModel):
    state_dim: Optional[int] = Field(default=None, gt=0)
    epsilon: float = Field(default=0.1, gt=0, description='Distance threshold for a novel state')
    r_max: float = Field(default=0.75, ge=0, description='Bonus paid for the first novel state')
    decay: float = Field(default=0.997, gt=0, le=1, description='Per-discovery bonus decay')
    max_states: int = Field(default=1000, ge=1)
    index: NeighborType = Field(default=NeighborType.KDTREE)
    rebuild_every: int = Field(default=256, ge=1, description='Insertions between balanced tree rebuilds')

    model_config = ConfigDict(extra='forbid')

    def for_env(self, spec: EnvSpec) -> NoveltyConfig:
        return self.model_copy(update={'state_dim': self.state_dim or spec.state_dim})


class RunConfig(BaseModel):
    env: EnvName = Field(default=EnvName.POINTMASS)
    td3: Td3Config = Field(default_factory=Td3Config)
    novelty: Optional[NoveltyConfig] = Field(default=None, description='Absent means plain TD3')
    seeds: List[int] = Field(default_factory=lambda: [0, 1, 2, 3, 4], min_length=1)
    eval_every: int = Field(default=250, gt=0)
    eval_episodes: int = Field(default=10, ge=1)
    output_dir: Optional[str] = Field(default=None)
    workers: int = Field(default=1, ge=1)

    model_config = ConfigDict(extra='forbid')

    @property
    def eecl(self) -> bool:
        return self.novelty is not None

    def resolved_output_dir(self) -> Path:
        return Path(self.output_dir or get_eecl_td3_settings().output.dir)


def parse_config(data: Dict[str, Any]) -> RunConfig:
    try:
        return RunConfig.model_validate(data)
    except ValidationError as e:
        error = e.errors()[0]
        field = '.'.join(str(part) for part in error['loc'])
        if error['type'] == 'extra_forbidden':
            raise UnknownConfigKeyException(field) from e
        raise ConfigRangeException(field, error['msg']) from e


def load_config(path: str | Path) -> RunConfig:
    path = Path(path)
    if not path.is_file():
        raise ConfigFileNotFoundException(f'Config file not found: {path}')
    try:
        data = yaml.safe_load(path.read_text(encoding='utf-8'))
    except yaml.YAMLError as e:
        raise ConfigSyntaxException(f'Malformed config {path}: {e}') from e
    if data is None:
        data = {}
    if not isinstance(data, dict):
        raise ConfigSyntaxException(f'Config {path} must be a mapping, got {type(data).__name__}')
    return parse_config(data)
