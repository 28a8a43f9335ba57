#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# @Time    : 2026/9/3
# @Author  : .*?
# @File    : linear_scan
# @Software: PyCharm
from __future__ import annotations

from typing import List, Optional, Sequence, Tuple

import numpy as np

from exception.exception import ShapeMismatchException
from extensions.neighbor.base_neighbor import BaseNeighborIndex, Neighbor, euclidean_distance


class LinearScanIndex(BaseNeighborIndex):
    """Brute-force exact search. O(n) per query."""

    def __init__(self, dim: Optional[int] = None):
        super().__init__(dim)
        self._items: List[Tuple[int, np.ndarray]] = []

    @classmethod
    def build(cls, points: Sequence[np.ndarray], ids: Optional[Sequence[int]] = None) -> LinearScanIndex:
        data = cls.stack(points)
        index = cls(data.shape[1] if data.shape[0] else None)
        if ids is not None and len(ids) != data.shape[0]:
            raise ShapeMismatchException(f'Got {len(ids)} ids for {data.shape[0]} points')
        for k, row in enumerate(data):
            index.insert(row, None if ids is None else ids[k])
        return index

    def insert(self, point: np.ndarray, point_id: Optional[int] = None) -> int:
        point = self.check_point(point).copy()
        point_id = self.claim_id(point_id)
        self._items.append((point_id, point))
        return point_id

    def remove(self, point_id: int) -> None:
        for k, (item_id, _) in enumerate(self._items):
            if item_id == point_id:
                del self._items[k]
                return
        raise KeyError(f'No point with id {point_id}')

    def nearest(self, query: np.ndarray) -> Optional[Neighbor]:
        query = np.asarray(query, dtype=np.float64)
        if self.dim is not None and (query.ndim != 1 or query.shape[0] != self.dim):
            raise ShapeMismatchException(f'Expected a query of dimension {self.dim}, got shape {query.shape}')
        best: Optional[Neighbor] = None
        for point_id, point in self._items:
            distance = euclidean_distance(point, query)
            if best is None or distance < best.distance or (distance == best.distance and point_id < best.point_id):
                best = Neighbor(point, distance, point_id)
        return best

    def items(self) -> List[Tuple[int, np.ndarray]]:
        return list(self._items)

    def __len__(self) -> int:
        return len(self._items)
