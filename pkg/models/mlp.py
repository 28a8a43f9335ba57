#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# @Time    : 2026/9/3
# @Author  : .*?
# @File    : mlp
# @Software: PyCharm
"""Dense ReLU networks with hand-written backpropagation, float64 throughout."""
from __future__ import annotations

import math
from typing import List, Sequence, Tuple

import numpy as np

from domain.enums.output_activation import OutputActivation
from exception.exception import ShapeMismatchException


class Mlp:
    """Multilayer perceptron: ReLU hidden layers, identity or scaled-tanh output.

    Layer k maps size[k] -> size[k+1] with a weight of shape (size[k+1], size[k]).
    ``forward`` and ``backward`` accept a single vector or a batch of row vectors.
    """

    def __init__(
            self,
            weights: Sequence[np.ndarray],
            biases: Sequence[np.ndarray],
            output_activation: OutputActivation = OutputActivation.IDENTITY,
            output_bound: float = 1.0,
    ):
        if not weights or len(weights) != len(biases):
            raise ShapeMismatchException('Weights and biases must be non-empty and of equal count')
        self.weights: List[np.ndarray] = [np.array(w, dtype=np.float64) for w in weights]
        self.biases: List[np.ndarray] = [np.array(b, dtype=np.float64) for b in biases]
        self.output_activation = OutputActivation(output_activation)
        self.output_bound = float(output_bound)
        for k, (w, b) in enumerate(zip(self.weights, self.biases)):
            if w.ndim != 2 or b.shape != (w.shape[0],):
                raise ShapeMismatchException(f'Layer {k}: weight {w.shape} does not match bias {b.shape}')
            if k > 0 and w.shape[1] != self.weights[k - 1].shape[0]:
                raise ShapeMismatchException(
                    f'Layer {k}: expects {w.shape[1]} inputs, previous layer gives {self.weights[k - 1].shape[0]}'
                )

    @classmethod
    def init(
            cls,
            layer_sizes: Sequence[int],
            output_activation: OutputActivation = OutputActivation.IDENTITY,
            seed: int = 0,
            output_bound: float = 1.0,
    ) -> Mlp:
        layer_sizes = list(layer_sizes)
        if len(layer_sizes) < 2:
            raise ValueError(f'layer_sizes needs at least an input and an output size, got {layer_sizes}')
        if any(int(size) != size or size <= 0 for size in layer_sizes):
            raise ValueError(f'layer_sizes must be positive integers, got {layer_sizes}')
        rng = np.random.default_rng(seed)
        weights, biases = [], []
        for fan_in, fan_out in zip(layer_sizes[:-1], layer_sizes[1:]):
            limit = 1.0 / math.sqrt(fan_in)
            weights.append(rng.uniform(-limit, limit, size=(fan_out, fan_in)))
            biases.append(np.zeros(fan_out, dtype=np.float64))
        return cls(weights, biases, output_activation=output_activation, output_bound=output_bound)

    @property
    def layer_sizes(self) -> List[int]:
        return [self.weights[0].shape[1]] + [w.shape[0] for w in self.weights]

    @property
    def input_size(self) -> int:
        return self.weights[0].shape[1]

    @property
    def output_size(self) -> int:
        return self.weights[-1].shape[0]

    def parameters(self) -> List[np.ndarray]:
        """Live parameter arrays in the order w0, b0, w1, b1, ..."""
        params: List[np.ndarray] = []
        for w, b in zip(self.weights, self.biases):
            params.extend((w, b))
        return params

    def forward(self, x: np.ndarray) -> np.ndarray:
        out, _, _ = self._forward(x)
        return out

    def backward(self, x: np.ndarray, upstream_grad: np.ndarray) -> Tuple[List[np.ndarray], np.ndarray]:
        """Gradients of sum(upstream_grad * forward(x)) w.r.t. parameters and input.

        Parameter gradients follow ``parameters()`` order and are summed over a batch.
        """
        out, inputs, pre_activations = self._forward(x)
        upstream_grad = np.asarray(upstream_grad, dtype=np.float64)
        if upstream_grad.shape != out.shape:
            raise ShapeMismatchException(
                f'Upstream gradient shape {upstream_grad.shape} does not match output shape {out.shape}'
            )
        batched = out.ndim == 2

        z_last = pre_activations[-1]
        if self.output_activation == OutputActivation.SCALED_TANH:
            delta = upstream_grad * self.output_bound * (1.0 - np.tanh(z_last) ** 2)
        else:
            delta = upstream_grad

        grads: List[np.ndarray] = [np.empty(0)] * (2 * len(self.weights))
        input_grad = delta
        for k in range(len(self.weights) - 1, -1, -1):
            a = inputs[k]
            if batched:
                grads[2 * k] = delta.T @ a
                grads[2 * k + 1] = delta.sum(axis=0)
            else:
                grads[2 * k] = np.outer(delta, a)
                grads[2 * k + 1] = delta.copy()
            input_grad = delta @ self.weights[k]
            if k > 0:
                delta = input_grad * (pre_activations[k - 1] > 0.0)
        return grads, input_grad

    def _forward(self, x: np.ndarray) -> Tuple[np.ndarray, List[np.ndarray], List[np.ndarray]]:
        a = np.asarray(x, dtype=np.float64)
        if a.ndim not in (1, 2) or a.shape[-1] != self.input_size:
            raise ShapeMismatchException(f'Expected input of length {self.input_size}, got shape {a.shape}')
        inputs: List[np.ndarray] = []
        pre_activations: List[np.ndarray] = []
        last = len(self.weights) - 1
        for k, (w, b) in enumerate(zip(self.weights, self.biases)):
            inputs.append(a)
            z = a @ w.T + b
            pre_activations.append(z)
            if k < last:
                a = np.maximum(z, 0.0)
            elif self.output_activation == OutputActivation.SCALED_TANH:
                a = self.output_bound * np.tanh(z)
            else:
                a = z
        return a, inputs, pre_activations

    def copy(self) -> Mlp:
        return Mlp(
            [w.copy() for w in self.weights],
            [b.copy() for b in self.biases],
            output_activation=self.output_activation,
            output_bound=self.output_bound,
        )

    def same_architecture(self, other: Mlp) -> bool:
        return (
                self.layer_sizes == other.layer_sizes
                and self.output_activation == other.output_activation
        )

    def load_parameters(self, params: Sequence[np.ndarray]) -> None:
        own = self.parameters()
        if len(params) != len(own):
            raise ShapeMismatchException(f'Expected {len(own)} parameter arrays, got {len(params)}')
        for k, (dst, src) in enumerate(zip(own, params)):
            src = np.asarray(src, dtype=np.float64)
            if src.shape != dst.shape:
                raise ShapeMismatchException(f'Parameter {k}: expected shape {dst.shape}, got {src.shape}')
            dst[...] = src


def soft_update(target: Mlp, online: Mlp, tau: float) -> Mlp:
    """Polyak averaging in place: target <- tau * online + (1 - tau) * target."""
    if not target.same_architecture(online):
        raise ShapeMismatchException(
            f'Cannot track {online.layer_sizes} with a target of {target.layer_sizes}'
        )
    if not 0.0 <= tau <= 1.0:
        raise ValueError(f'tau must lie in [0, 1], got {tau}')
    for dst, src in zip(target.parameters(), online.parameters()):
        if tau == 1.0:
            dst[...] = src
        elif tau != 0.0:
            dst *= 1.0 - tau
            dst += tau * src
    return target
