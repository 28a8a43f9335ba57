#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# @Time    : 2026/9/8
# @Author  : .*?
# @File    : test_mlp
# @Software: PyCharm
import math

import numpy as np
import pytest

from domain.enums.output_activation import OutputActivation
from exception.exception import ShapeMismatchException
from models.mlp import Mlp, soft_update


def loss_of(net: Mlp, x: np.ndarray, upstream: np.ndarray) -> float:
    return float(np.sum(upstream * net.forward(x)))


def finite_difference_check(net: Mlp, x: np.ndarray, upstream: np.ndarray, h: float = 1e-5) -> None:
    grads, input_grad = net.backward(x, upstream)
    for param, grad in zip(net.parameters(), grads):
        assert grad.shape == param.shape
        numeric = np.zeros_like(param)
        for idx in np.ndindex(param.shape):
            original = param[idx]
            param[idx] = original + h
            plus = loss_of(net, x, upstream)
            param[idx] = original - h
            minus = loss_of(net, x, upstream)
            param[idx] = original
            numeric[idx] = (plus - minus) / (2 * h)
        np.testing.assert_allclose(grad, numeric, rtol=1e-4, atol=1e-6)

    numeric_input = np.zeros_like(x)
    for idx in np.ndindex(x.shape):
        shifted = x.copy()
        shifted[idx] += h
        plus = loss_of(net, shifted, upstream)
        shifted[idx] -= 2 * h
        minus = loss_of(net, shifted, upstream)
        numeric_input[idx] = (plus - minus) / (2 * h)
    np.testing.assert_allclose(input_grad, numeric_input, rtol=1e-4, atol=1e-6)


class TestInit:
    def test_actor_shape(self):
        net = Mlp.init([10, 400, 300, 7], OutputActivation.SCALED_TANH, seed=0, output_bound=1.0)
        assert [w.shape for w in net.weights] == [(400, 10), (300, 400), (7, 300)]
        assert [b.shape for b in net.biases] == [(400,), (300,), (7,)]

    def test_deterministic(self):
        a = Mlp.init([1, 1], seed=0)
        b = Mlp.init([1, 1], seed=0)
        for p, q in zip(a.parameters(), b.parameters()):
            assert np.array_equal(p, q)

    def test_first_layer_bound(self):
        net = Mlp.init([3, 5, 2], seed=7)
        assert np.all(np.abs(net.weights[0]) <= 1 / math.sqrt(3))
        assert np.all(net.biases[0] == 0)

    @pytest.mark.parametrize('sizes', [[], [3], [3, 0, 1], [2, -1]])
    def test_rejects_bad_sizes(self, sizes):
        with pytest.raises(ValueError):
            Mlp.init(sizes)


class TestForward:
    def test_zero_network(self):
        net = Mlp([np.zeros((2, 3)), np.zeros((4, 2))], [np.zeros(2), np.zeros(4)])
        assert np.array_equal(net.forward(np.array([1.0, -2.0, 3.0])), np.zeros(4))

    def test_affine(self):
        net = Mlp([np.array([[2.0]])], [np.array([1.0])])
        assert net.forward(np.array([3.0])).tolist() == [7.0]

    def test_matches_naive_oracle(self):
        net = Mlp.init([3, 4, 2], seed=3)
        rng = np.random.default_rng(0)
        net.biases[0][:] = rng.normal(size=4)
        x = rng.normal(size=3)
        hidden = [max(0.0, sum(net.weights[0][j, i] * x[i] for i in range(3)) + net.biases[0][j]) for j in range(4)]
        out = [sum(net.weights[1][k, j] * hidden[j] for j in range(4)) + net.biases[1][k] for k in range(2)]
        np.testing.assert_allclose(net.forward(x), out, rtol=0, atol=1e-12)

    def test_scaled_tanh_bounded(self):
        net = Mlp.init([2, 8, 3], OutputActivation.SCALED_TANH, seed=1, output_bound=2.5)
        for w in net.weights:
            w *= 50.0
        out = net.forward(np.random.default_rng(0).normal(size=(100, 2)) * 10)
        assert np.all(np.abs(out) <= 2.5)

    def test_batch_matches_rows(self):
        net = Mlp.init([4, 5, 3], seed=2)
        x = np.random.default_rng(2).normal(size=(6, 4))
        batch = net.forward(x)
        for row, out in zip(x, batch):
            np.testing.assert_allclose(net.forward(row), out, rtol=0, atol=1e-14)

    def test_wrong_input_length(self):
        net = Mlp.init([4, 2], seed=0)
        with pytest.raises(ShapeMismatchException):
            net.forward(np.zeros(3))


class TestBackward:
    def test_zero_upstream(self):
        net = Mlp.init([3, 4, 2], seed=0)
        grads, input_grad = net.backward(np.ones(3), np.zeros(2))
        assert all(not np.any(g) for g in grads)
        assert not np.any(input_grad)

    def test_linear_input_grad(self):
        w = np.array([[1.0, 2.0], [3.0, 4.0], [5.0, 6.0]])
        net = Mlp([w], [np.zeros(3)])
        upstream = np.array([1.0, -1.0, 0.5])
        _, input_grad = net.backward(np.array([0.3, 0.7]), upstream)
        np.testing.assert_allclose(input_grad, w.T @ upstream)

    def test_finite_differences_4_8_3(self):
        rng = np.random.default_rng(11)
        net = Mlp.init([4, 8, 3], seed=11)
        net.biases[0][:] = rng.normal(scale=0.1, size=8)
        finite_difference_check(net, rng.normal(size=4), rng.normal(size=3))

    def test_finite_differences_random_networks(self):
        rng = np.random.default_rng(2024)
        for k in range(20):
            sizes = [int(n) for n in rng.integers(1, 7, size=int(rng.integers(2, 5)))]
            activation = OutputActivation.SCALED_TANH if k % 2 else OutputActivation.IDENTITY
            net = Mlp.init(sizes, activation, seed=k, output_bound=float(rng.uniform(0.5, 2.0)))
            for b in net.biases:
                b[:] = rng.normal(scale=0.1, size=b.shape)
            x = rng.normal(size=(3, sizes[0]))
            upstream = rng.normal(size=(3, sizes[-1]))
            finite_difference_check(net, x, upstream)

    def test_upstream_shape_checked(self):
        net = Mlp.init([3, 2], seed=0)
        with pytest.raises(ShapeMismatchException):
            net.backward(np.zeros(3), np.zeros(3))


class TestSoftUpdate:
    def _pair(self):
        online = Mlp.init([2, 3, 1], seed=1)
        target = Mlp.init([2, 3, 1], seed=2)
        return target, online

    def test_tau_one_copies(self):
        target, online = self._pair()
        soft_update(target, online, 1.0)
        for t, o in zip(target.parameters(), online.parameters()):
            assert np.array_equal(t, o)

    def test_tau_zero_keeps(self):
        target, online = self._pair()
        before = [p.copy() for p in target.parameters()]
        soft_update(target, online, 0.0)
        for t, b in zip(target.parameters(), before):
            assert np.array_equal(t, b)

    def test_polyak_arithmetic(self):
        online = Mlp([np.ones((1, 1))], [np.ones(1)])
        target = Mlp([np.zeros((1, 1))], [np.zeros(1)])
        soft_update(target, online, 0.005)
        assert target.weights[0][0, 0] == 0.005
        assert target.biases[0][0] == 0.005

    def test_general_tau_exact(self):
        target, online = self._pair()
        expected = [t * (1.0 - 0.005) + 0.005 * o for t, o in zip(target.parameters(), online.parameters())]
        soft_update(target, online, 0.005)
        for t, e in zip(target.parameters(), expected):
            assert np.array_equal(t, e)

    def test_architecture_mismatch(self):
        with pytest.raises(ShapeMismatchException):
            soft_update(Mlp.init([2, 3, 1]), Mlp.init([2, 4, 1]), 0.5)


class TestParameters:
    def test_copy_is_independent(self):
        net = Mlp.init([2, 3, 1], seed=0)
        clone = net.copy()
        clone.weights[0][0, 0] += 1.0
        assert net.weights[0][0, 0] != clone.weights[0][0, 0]

    def test_load_parameters_shape_error(self):
        net = Mlp.init([2, 3, 1], seed=0)
        other = Mlp.init([2, 4, 1], seed=0)
        with pytest.raises(ShapeMismatchException):
            net.load_parameters(other.parameters())
