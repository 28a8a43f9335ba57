#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# @Time    : 2026/9/3
# @Author  : .*?
# @File    : base_neighbor
# @Software: PyCharm
from __future__ import annotations

from abc import ABC, abstractmethod
from typing import Iterable, List, NamedTuple, Optional, Sequence, Tuple

import numpy as np

from exception.exception import ShapeMismatchException


class Neighbor(NamedTuple):
    point: np.ndarray
    distance: float
    point_id: int


def euclidean_distance(a: np.ndarray, b: np.ndarray) -> float:
    # every backend measures through here so distances compare bit-for-bit
    return float(np.linalg.norm(a - b))


class BaseNeighborIndex(ABC):
    """Exact nearest-neighbor index over fixed-length float vectors.

    Every stored point carries an integer id; equal distances resolve to the smallest id,
    which callers assign in insertion order.
    """

    def __init__(self, dim: Optional[int] = None):
        self.dim = dim
        self._next_id = 0

    @classmethod
    @abstractmethod
    def build(cls, points: Sequence[np.ndarray], ids: Optional[Sequence[int]] = None) -> BaseNeighborIndex:
        raise NotImplementedError

    @abstractmethod
    def insert(self, point: np.ndarray, point_id: Optional[int] = None) -> int:
        raise NotImplementedError

    @abstractmethod
    def remove(self, point_id: int) -> None:
        raise NotImplementedError

    @abstractmethod
    def nearest(self, query: np.ndarray) -> Optional[Neighbor]:
        raise NotImplementedError

    @abstractmethod
    def items(self) -> List[Tuple[int, np.ndarray]]:
        raise NotImplementedError

    @abstractmethod
    def __len__(self) -> int:
        raise NotImplementedError

    def points(self) -> List[np.ndarray]:
        return [point for _, point in self.items()]

    def check_point(self, point: np.ndarray) -> np.ndarray:
        point = np.asarray(point, dtype=np.float64)
        if point.ndim != 1:
            raise ShapeMismatchException(f'Expected a 1-D point, got shape {point.shape}')
        if self.dim is None:
            self.dim = point.shape[0]
        elif point.shape[0] != self.dim:
            raise ShapeMismatchException(f'Expected a point of dimension {self.dim}, got {point.shape[0]}')
        return point

    def claim_id(self, point_id: Optional[int]) -> int:
        if point_id is None:
            point_id = self._next_id
        self._next_id = max(self._next_id, point_id + 1)
        return point_id

    @staticmethod
    def stack(points: Iterable[np.ndarray]) -> np.ndarray:
        rows = [np.asarray(p, dtype=np.float64) for p in points]
        if not rows:
            return np.empty((0, 0), dtype=np.float64)
        dims = {row.shape for row in rows}
        if len(dims) != 1 or rows[0].ndim != 1:
            raise ShapeMismatchException(f'Points must share one 1-D shape, got {sorted(dims)}')
        return np.vstack(rows)
