#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# @Time    : 2026/9/8
# @Author  : .*?
# @File    : test_trainer
# @Software: PyCharm
from domain.enums.arm import Arm
from launch.trainer import RunSeeds, run_training
from setting.run_config import NoveltyConfig
from utils.curve_util import read_curve_csv
from utils.path_util import PathUtil


class TestRunTraining:
    def test_zero_steps(self, tiny_run, tmp_path):
        config = tiny_run.model_copy(update={'td3': tiny_run.td3.model_copy(update={'total_steps': 0})})
        curve = run_training(config, seed=0)
        assert curve.steps == [0]
        assert curve.final.cumulative_env_reward == 0.0
        assert curve.final.novel_state_count == 0

    def test_eval_schedule_and_files(self, tiny_run, tmp_path):
        curve = run_training(tiny_run, seed=0)
        assert curve.steps == [0, 40, 80]
        csv_path = PathUtil.curve_file(tmp_path, 'pointmass', Arm.EECL, 0)
        assert csv_path.is_file()
        assert PathUtil.checkpoint_file(tmp_path, 'pointmass', Arm.EECL, 0).is_file()
        assert read_curve_csv(csv_path) == curve

    def test_novelty_columns(self, tiny_run):
        curve = run_training(tiny_run, seed=1)
        counts = [r.novel_state_count for r in curve.records]
        assert counts == sorted(counts)
        assert 0 < counts[-1] <= 80
        assert curve.final.cumulative_exploration_reward > 0

    def test_byte_identical_reruns(self, tiny_run, tmp_path):
        first = tiny_run.model_copy(update={'output_dir': str(tmp_path / 'a')})
        second = tiny_run.model_copy(update={'output_dir': str(tmp_path / 'b')})
        run_training(first, seed=3)
        run_training(second, seed=3)
        a = PathUtil.curve_file(tmp_path / 'a', 'pointmass', Arm.EECL, 3).read_bytes()
        b = PathUtil.curve_file(tmp_path / 'b', 'pointmass', Arm.EECL, 3).read_bytes()
        assert a == b

    def test_baseline_with_monitor(self, tiny_run):
        base = tiny_run.model_copy(update={'novelty': None})
        curve = run_training(base, seed=0, passive_novelty=NoveltyConfig())
        assert curve.final.novel_state_count > 0
        assert all(r.cumulative_exploration_reward == 0.0 for r in curve.records)

    def test_arms_share_warmup(self, tiny_run, tmp_path):
        config = tiny_run.model_copy(update={'eval_every': 10})
        eecl = run_training(config, seed=2)
        base = run_training(config.model_copy(update={'novelty': None}), seed=2)
        for a, b in zip(eecl.records, base.records):
            if a.step <= config.td3.warmup_steps:
                assert a.mean_eval_return == b.mean_eval_return
                assert a.cumulative_env_reward == b.cumulative_env_reward

    def test_distinct_run_seeds(self):
        seeds = RunSeeds(0)
        assert len({seeds.init, seeds.env, seeds.eval, seeds.action}) == 4
        assert RunSeeds(0).action == seeds.action != RunSeeds(1).action
