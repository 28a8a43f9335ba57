#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# @Time    : 2026/9/4
# @Author  : .*?
# @File    : model_factory
# @Software: PyCharm
from domain.enums.output_activation import OutputActivation
from models.mlp import Mlp
from setting.run_config import Td3Config


class ModelFactory:
    """Builds the actor and critic networks for a completed Td3Config."""

    @staticmethod
    def _check(config: Td3Config) -> None:
        if not config.is_complete:
            raise ValueError('Td3Config needs state_dim, action_dim and action_bound, see Td3Config.for_env')

    @classmethod
    def create_actor(cls, config: Td3Config, seed: int) -> Mlp:
        cls._check(config)
        return Mlp.init(
            [config.state_dim, *config.hidden_sizes, config.action_dim],
            output_activation=OutputActivation.SCALED_TANH,
            seed=seed,
            output_bound=config.action_bound,
        )

    @classmethod
    def create_critic(cls, config: Td3Config, seed: int) -> Mlp:
        # the critic sees state and action concatenated at its first layer
        cls._check(config)
        return Mlp.init(
            [config.state_dim + config.action_dim, *config.hidden_sizes, 1],
            output_activation=OutputActivation.IDENTITY,
            seed=seed,
        )
