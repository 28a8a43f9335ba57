#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# @Time    : 2026/9/7
# @Author  : .*?
# @File    : main
# @Software: PyCharm
import sys
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional

import click
import numpy as np
from loguru import logger

from agent.td3_agent import evaluate
from config.loguru import Log
from constants.constants import Constants
from domain.enums.arm import Arm
from domain.enums.env_name import EnvName
from domain.result.result import Result
from envs.env_factory import make_env
from exception.exception import ConfigException, ConfigRangeException
from launch.comparison import run_comparison
from launch.trainer import RunSeeds, run_training
from setting.run_config import NoveltyConfig, RunConfig, load_config, parse_config
from utils.checkpoint_util import load_checkpoint_agent
from utils.path_util import PathUtil
from utils.plot_helper import emit_plot

config_option = click.option('--config', 'config_path', type=click.Path(dir_okay=False), help='Run configuration YAML.')
env_option = click.option('--env', type=click.Choice([name.value for name in EnvName]), help='Environment name.')
steps_option = click.option('--steps', type=int, help='Total environment steps T.')
out_option = click.option('--out', type=click.Path(file_okay=False), help='Output directory.')


def parse_seeds(value: str) -> List[int]:
    try:
        return [int(part) for part in value.split(',') if part.strip()]
    except ValueError as e:
        raise ConfigRangeException('seeds', f'expected comma-separated integers, got {value!r}') from e


def build_config(
        config_path: Optional[str],
        env: Optional[str] = None,
        steps: Optional[int] = None,
        seeds: Optional[List[int]] = None,
        out: Optional[str] = None,
) -> RunConfig:
    """Configuration file (or defaults) with command-line overrides, validated once at the end."""
    config = load_config(config_path) if config_path else RunConfig()
    data: Dict[str, Any] = config.model_dump(mode='json', exclude_none=True)
    if env is not None:
        data['env'] = env
    if steps is not None:
        data['td3']['total_steps'] = steps
    if seeds is not None:
        data['seeds'] = seeds
    if out is not None:
        data['output_dir'] = out
    return parse_config(data)


def execute(action: Callable[[], Any]) -> None:
    """Run a command, print its Result envelope and exit with the matching code."""
    try:
        result = Result.ok(data=action())
    except ConfigException as e:
        logger.error(f"Configuration error: {e}")
        result = Result.from_exception(e)
    except Exception as e:
        logger.exception(f"Run failed: {e}")
        result = Result.from_exception(e)
    click.echo(result.model_dump_json(indent=2))
    sys.exit(result.code)


class ResultGroup(click.Group):
    """Command group that reports bad flag values as a configuration Result instead of a usage dump."""

    def main(self, *args, **kwargs):
        kwargs['standalone_mode'] = False
        try:
            return super().main(*args, **kwargs)
        except click.UsageError as e:
            logger.error(f"Configuration error: {e.format_message()}")
            result = Result.failed(code=Constants.ExitCode.CONFIG_ERROR, message=e.format_message())
        except click.ClickException as e:
            logger.error(f"Run failed: {e.format_message()}")
            result = Result.failed(message=e.format_message())
        except click.Abort:
            result = Result.failed(message='Aborted')
        click.echo(result.model_dump_json(indent=2))
        sys.exit(result.code)


@click.group(cls=ResultGroup)
def cli():
    Log.start()


@cli.command()
@config_option
@env_option
@click.option('--seed', type=int, help='Run seed; defaults to the first configured seed.')
@steps_option
@click.option('--no-eecl', is_flag=True, help='Train plain TD3 without the novelty bonus.')
@out_option
def train(config_path, env, seed, steps, no_eecl, out):
    """Train one agent and write its learning curve and checkpoint."""
    def action():
        config = build_config(config_path, env=env, steps=steps, out=out)
        if no_eecl:
            config = config.model_copy(update={'novelty': None})
        elif config_path is None:
            config = config.model_copy(update={'novelty': NoveltyConfig()})
        run_seed = config.seeds[0] if seed is None else seed
        curve = run_training(config, run_seed)
        out_dir = config.resolved_output_dir()
        arm = Arm.EECL if config.eecl else Arm.BASE
        return {
            'env': str(config.env),
            'seed': run_seed,
            'eecl': config.eecl,
            'final': curve.final.model_dump(),
            'curve_csv': str(PathUtil.curve_file(out_dir, config.env, arm, run_seed)),
            'checkpoint': str(PathUtil.checkpoint_file(out_dir, config.env, arm, run_seed)),
        }

    execute(action)


@cli.command(name='eval')
@click.argument('checkpoint', type=click.Path(dir_okay=False))
@env_option
@click.option('--episodes', type=click.IntRange(min=1), help='Evaluation episodes.')
@click.option('--seed', type=int, help='Evaluate on the episode seeds of this run seed.')
def evaluate_checkpoint(checkpoint, env, episodes, seed):
    """Mean return of the noise-free policy stored in CHECKPOINT."""
    def action():
        agent, _, run_config = load_checkpoint_agent(checkpoint)
        env_name = env or (run_config.env if run_config is not None else None)
        if env_name is None:
            raise ConfigRangeException('env', 'checkpoint holds no run configuration, pass --env')
        count = episodes or (run_config.eval_episodes if run_config is not None else 10)
        rng = np.random.default_rng(RunSeeds(seed).eval) if seed is not None else None
        mean_return = evaluate(agent, make_env(env_name), count, rng)
        return {'checkpoint': checkpoint, 'env': str(env_name), 'episodes': count, 'mean_return': mean_return}

    execute(action)


@cli.command()
@config_option
@env_option
@click.option('--seeds', help='Comma-separated seeds, e.g. 0,1,2,3,4.')
@steps_option
@out_option
@click.option('--plot/--no-plot', default=True, show_default=True, help='Render the comparison figure.')
def compare(config_path, env, seeds, steps, out, plot):
    """EECL-TD3 against TD3 over paired seeds."""
    def action():
        config = build_config(
            config_path, env=env, steps=steps, out=out, seeds=parse_seeds(seeds) if seeds else None
        )
        report = run_comparison(config)
        data = {'csv': report.csv_path, 'summary_file': report.summary_path, 'summary': report.summary.model_dump()}
        if plot:
            data['plot'] = str(emit_plot(report.csv_path, Path(report.csv_path).with_suffix('.png')))
        return data

    execute(action)


@cli.command()
@click.argument('csv', type=click.Path(dir_okay=False))
@click.option('--out', type=click.Path(dir_okay=False), help='Image path; defaults to the CSV path with .png.')
def plot(csv, out):
    """Render a comparison CSV with smoothed curves and half-std bands."""
    execute(lambda: {'plot': str(emit_plot(csv, out or Path(csv).with_suffix('.png')))})


if __name__ == '__main__':
    cli()
