#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# @Time    : 2026/9/7
# @Author  : .*?
# @File    : plot_helper
# @Software: PyCharm
from pathlib import Path
from typing import Optional, Sequence

import matplotlib

matplotlib.use('Agg')

import matplotlib.pyplot as plt
import numpy as np
import pandas as pd
from loguru import logger

from constants.constants import Constants
from utils.curve_util import read_comparison_csv
from utils.path_util import PathUtil


def moving_average(values: Sequence[float], window: int = Constants.Plot.SMOOTHING_WINDOW) -> np.ndarray:
    """Centered moving average; near the ends only the available points are averaged."""
    if window < 1:
        raise ValueError(f'window must be positive, got {window}')
    series = pd.Series(np.asarray(values, dtype=np.float64))
    return series.rolling(window=window, center=True, min_periods=1).mean().to_numpy()


def convergence_step(
        steps: Sequence[int],
        values: Sequence[float],
        fraction: float = Constants.Plot.CONVERGENCE_FRACTION,
) -> Optional[int]:
    """First step at which ``values`` has covered ``fraction`` of the way from its first to its final value.

    The target is measured from the first value rather than from zero: returns are often
    negative, and "90% of the final value" then lies above the final value for a curve that
    improves towards a negative final return, which the curve may never reach.
    """
    values = np.asarray(values, dtype=np.float64)
    if values.size == 0:
        return None
    if len(steps) != values.size:
        raise ValueError(f'Got {len(steps)} steps for {values.size} values')
    first, final = values[0], values[-1]
    target = first + fraction * (final - first)
    reached = values >= target if final >= first else values <= target
    return int(steps[int(np.argmax(reached))])


def emit_plot(
        csv_path: str | Path,
        out_path: str | Path,
        window: int = Constants.Plot.SMOOTHING_WINDOW,
        title: Optional[str] = None,
) -> Path:
    """Render a comparison CSV as smoothed mean curves with shaded half-std bands."""
    frame = read_comparison_csv(csv_path)
    out_path = Path(out_path)
    PathUtil.check_or_make_dir(out_path.parent)
    if frame.empty:
        logger.warning(f"{csv_path} holds no evaluation rows, the figure will be empty")

    steps = frame['step'].to_numpy()
    fig, ax = plt.subplots(figsize=(6.4, 4.0))
    for arm, label in (('eecl', 'EECL-TD3'), ('base', 'TD3')):
        mean = moving_average(frame[f'mean_{arm}'], window)
        band = moving_average(frame[f'halfstd_{arm}'], window)
        line, = ax.plot(steps, mean, label=label, linewidth=1.2)
        ax.fill_between(steps, mean - band, mean + band, color=line.get_color(), alpha=0.25, linewidth=0)

    ax.set_xlabel('Environment steps')
    ax.set_ylabel('Mean evaluation return')
    ax.set_title(title or Path(csv_path).stem)
    ax.grid(True, alpha=0.25)
    ax.legend(loc='best', frameon=False)
    fig.tight_layout()
    fig.savefig(out_path, dpi=150)
    plt.close(fig)
    logger.info(f"Wrote plot {out_path}")
    return out_path
