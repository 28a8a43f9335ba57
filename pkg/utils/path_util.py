#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# @Time    : 2026/9/6
# @Author  : .*?
# @File    : path_util
# @Software: PyCharm
from pathlib import Path

from domain.enums.arm import Arm


class PathUtil:
    @staticmethod
    def check_or_make_dir(path: str | Path) -> Path:
        path = Path(path)
        path.mkdir(parents=True, exist_ok=True)
        return path

    @staticmethod
    def check_or_make_dirs(*paths):
        for path in paths:
            PathUtil.check_or_make_dir(path)

    @staticmethod
    def curve_file(output_dir: str | Path, env: str, arm: Arm, seed: int) -> Path:
        return Path(output_dir) / f'curve_{env}_{arm}_seed{seed}.csv'

    @staticmethod
    def checkpoint_file(output_dir: str | Path, env: str, arm: Arm, seed: int) -> Path:
        return Path(output_dir) / f'checkpoint_{env}_{arm}_seed{seed}.npz'

    @staticmethod
    def comparison_file(output_dir: str | Path, env: str) -> Path:
        return Path(output_dir) / f'comparison_{env}.csv'

    @staticmethod
    def summary_file(output_dir: str | Path, env: str) -> Path:
        return Path(output_dir) / f'summary_{env}.json'
