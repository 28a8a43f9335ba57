#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# @Time    : 2026/9/3
# @Author  : .*?
# @File    : optimizer
# @Software: PyCharm
from __future__ import annotations

from typing import Dict, List, Sequence

import numpy as np

from domain.enums.optimizer_kind import OptimizerKind
from exception.exception import NonFiniteException, ShapeMismatchException


class Optimizer:
    """Adam, or AdamW with decoupled weight decay, over a fixed list of arrays."""

    def __init__(
            self,
            params: Sequence[np.ndarray],
            kind: OptimizerKind = OptimizerKind.ADAM,
            learning_rate: float = 1e-3,
            beta1: float = 0.9,
            beta2: float = 0.999,
            eps_hat: float = 1e-8,
            weight_decay: float = 0.0,
    ):
        self.kind = OptimizerKind(kind)
        if learning_rate <= 0 or beta1 <= 0 or beta2 <= 0 or eps_hat <= 0:
            raise ValueError('learning_rate, beta1, beta2 and eps_hat must be positive')
        if weight_decay < 0:
            raise ValueError(f'weight_decay must be non-negative, got {weight_decay}')
        if self.kind == OptimizerKind.ADAM and weight_decay != 0.0:
            raise ValueError('Adam takes no weight decay, use AdamW')
        self.learning_rate = float(learning_rate)
        self.beta1 = float(beta1)
        self.beta2 = float(beta2)
        self.eps_hat = float(eps_hat)
        self.weight_decay = float(weight_decay)
        self.step_count = 0
        self.first_moment: List[np.ndarray] = [np.zeros_like(p, dtype=np.float64) for p in params]
        self.second_moment: List[np.ndarray] = [np.zeros_like(p, dtype=np.float64) for p in params]

    def step(self, params: Sequence[np.ndarray], grads: Sequence[np.ndarray]) -> None:
        """One update of ``params`` in place."""
        if len(params) != len(self.first_moment) or len(grads) != len(params):
            raise ShapeMismatchException(
                f'Optimizer tracks {len(self.first_moment)} arrays, got {len(params)} params and {len(grads)} grads'
            )
        for k, (p, g, m) in enumerate(zip(params, grads, self.first_moment)):
            if p.shape != m.shape or np.shape(g) != m.shape:
                raise ShapeMismatchException(
                    f'Array {k}: moment {m.shape}, param {p.shape}, grad {np.shape(g)}'
                )
            if not np.all(np.isfinite(g)):
                raise NonFiniteException(f'Non-finite gradient in array {k} at step {self.step_count + 1}')

        self.step_count += 1
        t = self.step_count
        bias1 = 1.0 - self.beta1 ** t
        bias2 = 1.0 - self.beta2 ** t
        for p, g, m, v in zip(params, grads, self.first_moment, self.second_moment):
            m *= self.beta1
            m += (1.0 - self.beta1) * g
            v *= self.beta2
            v += (1.0 - self.beta2) * np.square(g)
            if self.kind == OptimizerKind.ADAMW and self.weight_decay:
                p -= self.learning_rate * self.weight_decay * p
            p -= self.learning_rate * (m / bias1) / (np.sqrt(v / bias2) + self.eps_hat)

    def state_dict(self) -> Dict[str, object]:
        return {
            'kind': str(self.kind),
            'step_count': self.step_count,
            'learning_rate': self.learning_rate,
            'beta1': self.beta1,
            'beta2': self.beta2,
            'eps_hat': self.eps_hat,
            'weight_decay': self.weight_decay,
        }

    def load_state(self, state: Dict[str, object], first_moment: Sequence[np.ndarray],
                   second_moment: Sequence[np.ndarray]) -> None:
        if OptimizerKind(state['kind']) != self.kind:
            raise ShapeMismatchException(f"Optimizer kind {state['kind']} does not match {self.kind}")
        if len(first_moment) != len(self.first_moment) or len(second_moment) != len(self.second_moment):
            raise ShapeMismatchException('Optimizer moment count does not match the tracked parameters')
        for dst, src in zip(self.first_moment + self.second_moment, list(first_moment) + list(second_moment)):
            if np.shape(src) != dst.shape:
                raise ShapeMismatchException(f'Optimizer moment shape {np.shape(src)} does not match {dst.shape}')
            dst[...] = src
        self.step_count = int(state['step_count'])
        self.learning_rate = float(state['learning_rate'])
        self.beta1 = float(state['beta1'])
        self.beta2 = float(state['beta2'])
        self.eps_hat = float(state['eps_hat'])
        self.weight_decay = float(state['weight_decay'])
