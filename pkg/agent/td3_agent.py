#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# @Time    : 2026/9/5
# @Author  : .*?
# @File    : td3_agent
# @Software: PyCharm
"""TD3 learner with optional novelty-bonus reward injection."""
from __future__ import annotations

from typing import Dict, List, Optional, Tuple

import numpy as np
from loguru import logger

from agent.replay_buffer import ReplayBuffer
from domain.entity.step_report import StepReport
from domain.entity.transition import Transition, TransitionBatch
from domain.enums.optimizer_kind import OptimizerKind
from envs.base_env import BaseEnv
from exception.exception import NonFiniteException, ShapeMismatchException
from models.mlp import Mlp, soft_update
from models.model_factory import ModelFactory
from models.optimizer import Optimizer
from novelty.novelty_detector import NoveltyDetector
from setting.run_config import Td3Config
from utils.helper import Helper


class Td3Agent:

    def __init__(self, config: Td3Config, seed: int = 0):
        if not config.is_complete:
            raise ValueError('Td3Config needs state_dim, action_dim and action_bound, see Td3Config.for_env')
        self.config = config
        actor_seed, critic1_seed, critic2_seed = Helper.spawn_seeds(seed, 3)

        self.actor = ModelFactory.create_actor(config, actor_seed)
        self.critic1 = ModelFactory.create_critic(config, critic1_seed)
        self.critic2 = ModelFactory.create_critic(config, critic2_seed)
        self.actor_target = self.actor.copy()
        self.critic1_target = self.critic1.copy()
        self.critic2_target = self.critic2.copy()

        self.actor_optimizer = Optimizer(
            self.actor.parameters(), OptimizerKind.ADAM, learning_rate=config.actor_lr
        )
        self.critic1_optimizer = Optimizer(
            self.critic1.parameters(), OptimizerKind.ADAMW,
            learning_rate=config.critic_lr, weight_decay=config.critic_weight_decay,
        )
        self.critic2_optimizer = Optimizer(
            self.critic2.parameters(), OptimizerKind.ADAMW,
            learning_rate=config.critic_lr, weight_decay=config.critic_weight_decay,
        )
        self.replay = ReplayBuffer(config.replay_capacity, config.state_dim, config.action_dim)
        self.step = 0

    def networks(self) -> Dict[str, Mlp]:
        return {
            'actor': self.actor,
            'critic1': self.critic1,
            'critic2': self.critic2,
            'actor_target': self.actor_target,
            'critic1_target': self.critic1_target,
            'critic2_target': self.critic2_target,
        }

    def optimizers(self) -> Dict[str, Tuple[Optimizer, Mlp]]:
        return {
            'actor': (self.actor_optimizer, self.actor),
            'critic1': (self.critic1_optimizer, self.critic1),
            'critic2': (self.critic2_optimizer, self.critic2),
        }

    @property
    def in_warmup(self) -> bool:
        return self.step < self.config.warmup_steps

    def _check_state(self, s: np.ndarray) -> np.ndarray:
        s = np.asarray(s, dtype=np.float64)
        if s.shape[-1:] != (self.config.state_dim,):
            raise ShapeMismatchException(f'Expected a state of length {self.config.state_dim}, got shape {s.shape}')
        return s

    def policy(self, s: np.ndarray) -> np.ndarray:
        """Deterministic action pi(s)."""
        return self.actor.forward(self._check_state(s))

    def select_action(self, s: np.ndarray, rng: np.random.Generator) -> np.ndarray:
        action = self.policy(s)
        bound = self.config.action_bound
        if self.config.explore_sigma > 0:
            action = action + rng.normal(0.0, self.config.explore_sigma * bound, size=action.shape)
        return np.clip(action, -bound, bound)

    @staticmethod
    def warmup_action(config: Td3Config, rng: np.random.Generator) -> np.ndarray:
        bound = config.action_bound
        return rng.uniform(-bound, bound, size=config.action_dim)

    @staticmethod
    def critic_input(states: np.ndarray, actions: np.ndarray) -> np.ndarray:
        return np.concatenate([states, actions], axis=-1)

    def compute_td_target(self, batch: TransitionBatch, rng: np.random.Generator) -> np.ndarray:
        """Clipped double-Q target with target-policy smoothing, from target networks only."""
        config = self.config
        noise_shape = (len(batch), config.action_dim)
        if config.smooth_sigma > 0:
            noise = np.clip(rng.normal(0.0, config.smooth_sigma, size=noise_shape), -config.smooth_clip, config.smooth_clip)
        else:
            noise = np.zeros(noise_shape)
        next_actions = np.clip(
            self.actor_target.forward(batch.next_states) + noise, -config.action_bound, config.action_bound
        )
        x = self.critic_input(batch.next_states, next_actions)
        q1 = self.critic1_target.forward(x)[:, 0]
        q2 = self.critic2_target.forward(x)[:, 0]
        return batch.rewards + config.discount * (1.0 - batch.dones) * np.minimum(q1, q2)

    @staticmethod
    def critic_gradient(critic: Mlp, x: np.ndarray, y: np.ndarray) -> Tuple[float, List[np.ndarray]]:
        """Mean squared TD error and its gradient; y is held constant."""
        error = critic.forward(x)[:, 0] - y
        loss = float(np.mean(error ** 2))
        grads, _ = critic.backward(x, (2.0 * error / error.size)[:, None])
        return loss, grads

    def update_critics(self, batch: TransitionBatch, y: np.ndarray) -> Tuple[float, float]:
        x = self.critic_input(batch.states, batch.actions)
        losses = []
        for name in ('critic1', 'critic2'):
            optimizer, critic = self.optimizers()[name]
            loss, grads = self.critic_gradient(critic, x, y)
            if not np.isfinite(loss):
                raise NonFiniteException(
                    f'{name} loss is {loss} at step {self.step} (replay size {len(self.replay)}, '
                    f'target range [{np.min(y)}, {np.max(y)}])'
                )
            optimizer.step(critic.parameters(), grads)
            losses.append(loss)
        return losses[0], losses[1]

    def actor_gradient(self, states: np.ndarray) -> Tuple[float, List[np.ndarray]]:
        """Objective mean Q1(s, pi(s)) and the gradient of its negation w.r.t. the actor."""
        actions = self.actor.forward(states)
        x = self.critic_input(states, actions)
        objective = float(np.mean(self.critic1.forward(x)))
        n = states.shape[0]
        _, x_grad = self.critic1.backward(x, np.full((n, 1), -1.0 / n))
        grads, _ = self.actor.backward(states, x_grad[:, self.config.state_dim:])
        return objective, grads

    def update_actor_and_targets(self, batch: TransitionBatch) -> Optional[float]:
        """Delayed policy step plus target tracking; None when t is not a multiple of d."""
        if self.step % self.config.policy_delay != 0:
            return None
        objective, grads = self.actor_gradient(batch.states)
        self.actor_optimizer.step(self.actor.parameters(), grads)
        tau = self.config.tau
        soft_update(self.critic1_target, self.critic1, tau)
        soft_update(self.critic2_target, self.critic2, tau)
        soft_update(self.actor_target, self.actor, tau)
        return objective

    def train_step(self, rng: np.random.Generator) -> Tuple[Tuple[float, float], Optional[float]]:
        batch = self.replay.sample(self.config.batch_size, rng)
        y = self.compute_td_target(batch, rng)
        losses = self.update_critics(batch, y)
        objective = self.update_actor_and_targets(batch)
        return losses, objective


def agent_step(
        agent: Td3Agent,
        env: BaseEnv,
        rng: np.random.Generator,
        detector: Optional[NoveltyDetector] = None,
        monitor: Optional[NoveltyDetector] = None,
) -> StepReport:
    """One environment step of the training loop, followed by one update once warmup is over.

    ``detector`` pays its bonus into the stored reward. ``monitor`` only records s' so a plain
    TD3 run can still count novel states.
    """
    s = env.observation
    if agent.in_warmup:
        a = Td3Agent.warmup_action(agent.config, rng)
    else:
        a = agent.select_action(s, rng)
    result = env.step(a)
    s_next = result.observation

    bonus = 0.0
    novel = False
    tracker = detector if detector is not None else monitor
    if tracker is not None:
        seen = tracker.novel_count
        reward = tracker.record_state(s_next)
        novel = tracker.novel_count > seen
        if tracker is detector:
            bonus = reward

    # a time-limit truncation is stored as not done so the target keeps bootstrapping from s'
    terminal = result.done and not result.truncated
    agent.replay.add(Transition(s, a, result.reward + bonus, s_next, terminal))
    agent.step += 1

    losses, objective = None, None
    if agent.step > agent.config.warmup_steps:
        losses, objective = agent.train_step(rng)
    if result.done:
        env.reset()
        logger.trace(f"Episode ended at step {agent.step} (truncated={result.truncated})")

    return StepReport(
        step=agent.step,
        env_reward=result.reward,
        bonus=bonus,
        novel=novel,
        done=result.done,
        critic_losses=losses,
        actor_objective=objective,
    )


def evaluate(agent: Td3Agent, env: BaseEnv, episodes: int = 10, rng: Optional[np.random.Generator] = None) -> float:
    """Mean undiscounted return of the noise-free policy. Touches only ``env``."""
    if episodes < 1:
        raise ValueError(f'episodes must be at least 1, got {episodes}')
    returns = []
    for _ in range(episodes):
        seed = None if rng is None else int(rng.integers(0, 2 ** 32))
        obs = env.reset(seed)
        total, done = 0.0, False
        while not done:
            result = env.step(agent.policy(obs))
            total += result.reward
            obs, done = result.observation, result.done
        returns.append(total)
    return float(np.mean(returns))
