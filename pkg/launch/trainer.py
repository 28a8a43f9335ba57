#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# @Time    : 2026/9/7
# @Author  : .*?
# @File    : trainer
# @Software: PyCharm
"""Single training run: T agent steps with periodic evaluation, then CSV and checkpoint."""
from pathlib import Path
from typing import Optional

import numpy as np
from loguru import logger

from agent.td3_agent import Td3Agent, agent_step, evaluate
from domain.entity.learning_curve import EvalRecord, LearningCurve
from domain.enums.arm import Arm
from envs.env_factory import EnvFactory, make_env
from novelty.novelty_detector import NoveltyDetector
from setting.run_config import NoveltyConfig, RunConfig
from utils.checkpoint_util import save_checkpoint
from utils.curve_util import write_curve_csv
from utils.helper import Helper
from utils.path_util import PathUtil


class RunSeeds:
    """Child seeds of one run seed. Both arms of a comparison derive the same values."""

    def __init__(self, seed: int):
        self.seed = seed
        self.init, self.env, self.eval, self.action = Helper.spawn_seeds(seed, 4)


def run_training(
        config: RunConfig,
        seed: int,
        passive_novelty: Optional[NoveltyConfig] = None,
        output_dir: Optional[str | Path] = None,
        arm: Optional[Arm] = None,
) -> LearningCurve:
    """Train one agent for ``config.td3.total_steps`` steps.

    With ``config.novelty`` set the detector's bonus is added to every stored reward. Otherwise
    ``passive_novelty`` may attach a monitor that counts novel states without paying for them.
    """
    spec = EnvFactory.get_env(config.env).spec
    td3 = config.td3.for_env(spec)
    seeds = RunSeeds(seed)
    arm = arm or (Arm.EECL if config.eecl else Arm.BASE)

    agent = Td3Agent(td3, seeds.init)
    logger.debug(
        f"[{config.env}/{arm}/seed {seed}] initial parameters "
        f"{Helper.parameter_hash(p for net in agent.networks().values() for p in net.parameters())[:16]}"
    )
    rng = np.random.default_rng(seeds.action)
    env = make_env(config.env)
    env.reset(seeds.env)
    eval_env = make_env(config.env)

    detector = NoveltyDetector(config.novelty.for_env(spec)) if config.eecl else None
    monitor = None
    if detector is None and passive_novelty is not None:
        monitor = NoveltyDetector(passive_novelty.for_env(spec))
    tracker = detector or monitor

    curve = LearningCurve()
    env_reward = 0.0

    def record() -> None:
        # same episode seeds at every evaluation point
        mean_return = evaluate(agent, eval_env, config.eval_episodes, np.random.default_rng(seeds.eval))
        curve.append(EvalRecord(
            step=agent.step,
            mean_eval_return=mean_return,
            cumulative_env_reward=env_reward,
            novel_state_count=tracker.novel_count if tracker is not None else 0,
            cumulative_exploration_reward=detector.cumulative_exploration_reward() if detector is not None else 0.0,
        ))
        logger.info(
            f"[{config.env}/{arm}/seed {seed}] step {agent.step}: eval return {mean_return:.4f}, "
            f"novel states {curve.final.novel_state_count}"
        )

    record()
    total_steps = td3.total_steps
    while agent.step < total_steps:
        report = agent_step(agent, env, rng, detector=detector, monitor=monitor)
        env_reward += report.env_reward
        if agent.step % config.eval_every == 0 or agent.step == total_steps:
            record()

    out = Path(output_dir) if output_dir is not None else config.resolved_output_dir()
    PathUtil.check_or_make_dir(out)
    csv_path = write_curve_csv(curve, PathUtil.curve_file(out, config.env, arm, seed))
    save_checkpoint(agent, detector, PathUtil.checkpoint_file(out, config.env, arm, seed), config)
    logger.info(f"[{config.env}/{arm}/seed {seed}] wrote {csv_path}")
    return curve
