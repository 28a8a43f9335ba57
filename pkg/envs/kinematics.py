#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# @Time    : 2026/9/5
# @Author  : .*?
# @File    : kinematics
# @Software: PyCharm
from typing import Sequence, Tuple

import numpy as np

LINK_LENGTHS: Tuple[float, ...] = (0.4, 0.3, 0.2)


def forward_kinematics(angles: Sequence[float], link_lengths: Sequence[float] = LINK_LENGTHS) -> Tuple[float, float]:
    """End-effector position of a planar serial chain with revolute joints at the links' bases."""
    angles = np.asarray(angles, dtype=np.float64)
    lengths = np.asarray(link_lengths, dtype=np.float64)
    if angles.shape != lengths.shape:
        raise ValueError(f'Got {angles.size} joint angles for {lengths.size} links')
    absolute = np.cumsum(angles)
    return float(np.sum(lengths * np.cos(absolute))), float(np.sum(lengths * np.sin(absolute)))
