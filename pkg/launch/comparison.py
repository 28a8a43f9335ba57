#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# @Time    : 2026/9/7
# @Author  : .*?
# @File    : comparison
# @Software: PyCharm
"""Paired EECL-vs-baseline runs across seeds, aggregated into one CSV and a JSON summary."""
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import List, Optional, Tuple

import numpy as np
import pandas as pd
from loguru import logger

from domain.entity.comparison_report import ComparisonReport, ComparisonRow, ComparisonSummary, SeedOutcome
from domain.entity.learning_curve import LearningCurve
from domain.enums.arm import Arm
from exception.exception import CommonException
from launch.trainer import run_training
from setting.run_config import NoveltyConfig, RunConfig
from utils.curve_util import write_comparison_csv
from utils.path_util import PathUtil
from utils.plot_helper import convergence_step, moving_average

RunTask = Tuple[RunConfig, int, Optional[NoveltyConfig], Path, Arm]


def _run_arm(task: RunTask) -> LearningCurve:
    config, seed, passive_novelty, output_dir, arm = task
    return run_training(config, seed, passive_novelty=passive_novelty, output_dir=output_dir, arm=arm)


def aggregate_curves(eecl_curves: List[LearningCurve], base_curves: List[LearningCurve]) -> List[ComparisonRow]:
    """Per-step mean and half the sample standard deviation across seeds; one seed gives a zero band."""
    frames = []
    for arm, curves in ((Arm.EECL, eecl_curves), (Arm.BASE, base_curves)):
        for k, curve in enumerate(curves):
            frames.append(pd.DataFrame({'arm': str(arm), 'run': k, 'step': curve.steps, 'value': curve.returns}))
    if not frames:
        return []
    long = pd.concat(frames, ignore_index=True)
    counts = long.groupby(['arm', 'step'])['run'].nunique()
    if counts.nunique() != 1:
        raise CommonException('Learning curves do not share the same evaluation steps')

    # sorted values make the statistics independent of seed order
    stats = (
        long.sort_values(['arm', 'step', 'value'])
        .groupby(['arm', 'step'])['value']
        .agg(['mean', 'std'])
        .fillna({'std': 0.0})
        .reset_index()
    )
    stats['halfstd'] = 0.5 * stats['std']
    wide = stats.pivot(index='step', columns='arm', values=['mean', 'halfstd']).sort_index()
    return [
        ComparisonRow(
            step=int(step),
            mean_eecl=float(row[('mean', str(Arm.EECL))]),
            halfstd_eecl=float(row[('halfstd', str(Arm.EECL))]),
            mean_base=float(row[('mean', str(Arm.BASE))]),
            halfstd_base=float(row[('halfstd', str(Arm.BASE))]),
        )
        for step, row in wide.iterrows()
    ]


def summarize(
        env: str,
        seeds: List[int],
        eecl_curves: List[LearningCurve],
        base_curves: List[LearningCurve],
) -> ComparisonSummary:
    outcomes = []
    for seed, eecl, base in zip(seeds, eecl_curves, base_curves):
        outcomes.append(SeedOutcome(
            seed=seed,
            final_eecl=eecl.final.mean_eval_return,
            final_base=base.final.mean_eval_return,
            eecl_wins=eecl.final.mean_eval_return > base.final.mean_eval_return,
            novel_eecl=eecl.final.novel_state_count,
            novel_base=base.final.novel_state_count,
            convergence_step_eecl=convergence_step(eecl.steps, moving_average(eecl.returns)),
            convergence_step_base=convergence_step(base.steps, moving_average(base.returns)),
        ))
    faster = sum(
        1 for o in outcomes
        if o.convergence_step_eecl is not None and o.convergence_step_base is not None
        and o.convergence_step_eecl <= o.convergence_step_base
    )
    return ComparisonSummary(
        env=env,
        seeds=list(seeds),
        final_median_eecl=float(np.median([o.final_eecl for o in outcomes])),
        final_median_base=float(np.median([o.final_base for o in outcomes])),
        wins=sum(1 for o in outcomes if o.final_eecl > o.final_base),
        losses=sum(1 for o in outcomes if o.final_eecl < o.final_base),
        novel_total_eecl=sum(o.novel_eecl for o in outcomes),
        novel_total_base=sum(o.novel_base for o in outcomes),
        faster_convergence_seeds=faster,
        outcomes=outcomes,
    )


def run_comparison(config: RunConfig, output_dir: Optional[str | Path] = None) -> ComparisonReport:
    """Run both arms for every seed with paired seeding; the baseline carries a passive novelty monitor."""
    novelty = config.novelty
    if novelty is None:
        novelty = NoveltyConfig()
        logger.info("No novelty block configured, comparing with default novelty settings")
    eecl_config = config.model_copy(update={'novelty': novelty})
    base_config = config.model_copy(update={'novelty': None})
    out = Path(output_dir) if output_dir is not None else config.resolved_output_dir()
    PathUtil.check_or_make_dir(out)

    tasks: List[RunTask] = []
    for seed in config.seeds:
        tasks.append((eecl_config, seed, None, out, Arm.EECL))
        tasks.append((base_config, seed, novelty, out, Arm.BASE))

    if config.workers > 1:
        logger.info(f"Running {len(tasks)} training runs on {config.workers} worker processes")
        with ProcessPoolExecutor(max_workers=config.workers) as executor:
            curves = list(executor.map(_run_arm, tasks))
    else:
        curves = [_run_arm(task) for task in tasks]
    eecl_curves, base_curves = curves[0::2], curves[1::2]

    rows = aggregate_curves(eecl_curves, base_curves)
    summary = summarize(str(config.env), config.seeds, eecl_curves, base_curves)
    csv_path = write_comparison_csv(rows, PathUtil.comparison_file(out, config.env))
    summary_path = PathUtil.summary_file(out, config.env)
    try:
        summary_path.write_text(summary.model_dump_json(indent=2), encoding='utf-8')
    except OSError as e:
        raise CommonException(f'Failed to write {summary_path}: {e}') from e

    logger.info(
        f"[{config.env}] median final return EECL {summary.final_median_eecl:.4f} vs TD3 "
        f"{summary.final_median_base:.4f}, EECL wins {summary.wins}/{len(config.seeds)}"
    )
    return ComparisonReport(
        rows=rows,
        summary=summary,
        eecl_curves=eecl_curves,
        base_curves=base_curves,
        csv_path=str(csv_path),
        summary_path=str(summary_path),
    )
