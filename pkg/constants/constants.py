#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# @Time    : 2026/9/2
# @Author  : .*?
# @File    : constants
# @Software: PyCharm
import os

from dotenv import find_dotenv, load_dotenv


class Constants:
    class Common:
        PROJECT_NAME: str = 'eecl-td3'

    class Path:
        # SYSTEM PATH
        ROOT_PATH: str = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
        LOG_PATH: str = os.path.join(ROOT_PATH, 'log')
        RESOURCE_PATH: str = os.path.join(ROOT_PATH, 'resource')
        OUTPUT_PATH: str = os.path.join(ROOT_PATH, 'output')
        ENV_FILE_PATH: str = os.path.join(ROOT_PATH, '.env')

        @classmethod
        def get_yaml_file_path(cls) -> str:
            """Get YAML configuration file path with proper environment handling"""
            load_dotenv(cls.ENV_FILE_PATH)

            env_name = os.environ.get('EECL_TD3_ENV', 'dev')
            yaml_file = os.path.join(cls.RESOURCE_PATH, f"{env_name}.yaml")

            return find_dotenv(filename=yaml_file) or yaml_file

    class Csv:
        # column order is part of the file contract
        CURVE_COLUMNS: tuple[str, ...] = (
            'step',
            'mean_eval_return',
            'cumulative_env_reward',
            'novel_state_count',
            'cumulative_exploration_reward',
        )
        COMPARISON_COLUMNS: tuple[str, ...] = (
            'step',
            'mean_eecl',
            'halfstd_eecl',
            'mean_base',
            'halfstd_base',
        )
        FLOAT_FORMAT: str = '%.17g'
        ENCODING: str = 'utf-8'

    class Checkpoint:
        FORMAT: str = 'eecl-td3-checkpoint'
        VERSION: int = 1
        META_KEY: str = '__meta__'

    class ExitCode:
        SUCCESS: int = 0
        CONFIG_ERROR: int = 1
        RUNTIME_ERROR: int = 2

    class Plot:
        SMOOTHING_WINDOW: int = 5
        CONVERGENCE_FRACTION: float = 0.9
