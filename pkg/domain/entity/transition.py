#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# @Time    : 2026/9/4
# @Author  : .*?
# @File    : transition
# @Software: PyCharm
from typing import NamedTuple

import numpy as np


class Transition(NamedTuple):
    s: np.ndarray
    a: np.ndarray
    r: float
    s_next: np.ndarray
    done: bool


class TransitionBatch(NamedTuple):
    states: np.ndarray
    actions: np.ndarray
    rewards: np.ndarray
    next_states: np.ndarray
    dones: np.ndarray

    def __len__(self) -> int:
        return self.states.shape[0]
