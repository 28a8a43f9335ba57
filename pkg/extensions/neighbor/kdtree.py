#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# @Time    : 2026/9/3
# @Author  : .*?
# @File    : kdtree
# @Software: PyCharm
from __future__ import annotations

import math
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from exception.exception import ShapeMismatchException
from extensions.neighbor.base_neighbor import BaseNeighborIndex, Neighbor, euclidean_distance

# far subtrees within this relative margin of the best distance are still searched
_PRUNE_SLACK = 1e-12


class KdNode:
    __slots__ = ('point', 'point_id', 'axis', 'left', 'right', 'deleted')

    def __init__(self, point: np.ndarray, point_id: int, axis: int):
        self.point = point
        self.point_id = point_id
        self.axis = axis
        self.left: Optional[KdNode] = None
        self.right: Optional[KdNode] = None
        self.deleted = False


class KdTree(BaseNeighborIndex):
    """k-d tree with cycling split axis.

    Left subtrees hold coordinates <= the node's on its axis, right subtrees >=.
    ``build`` splits at the median, ``insert`` descends without rebalancing and ``remove``
    only marks the node, so removed points keep routing searches until the next ``build``.
    Callers that evict often rebuild on a schedule rather than after every removal; a marked
    node is skipped as a candidate, so ``nearest`` is exact either way.
    """

    def __init__(self, dim: Optional[int] = None):
        super().__init__(dim)
        self.root: Optional[KdNode] = None
        self._nodes: Dict[int, KdNode] = {}

    @classmethod
    def build(cls, points: Sequence[np.ndarray], ids: Optional[Sequence[int]] = None) -> KdTree:
        data = cls.stack(points)
        n = data.shape[0]
        if n == 0:
            return cls()
        if ids is None:
            ids = list(range(n))
        elif len(ids) != n:
            raise ShapeMismatchException(f'Got {len(ids)} ids for {n} points')
        tree = cls(data.shape[1])
        tree.root = tree._build(data, list(ids), np.arange(n), 0)
        tree._next_id = max(ids) + 1
        return tree

    def _build(self, data: np.ndarray, ids: List[int], order: np.ndarray, depth: int) -> Optional[KdNode]:
        if order.size == 0:
            return None
        axis = depth % self.dim
        if order.size == 1:
            return self._node(data[order[0]].copy(), ids[order[0]], axis)
        # coordinate first, then input position, so equal coordinates keep input order
        ranked = order[np.lexsort((order, data[order, axis]))]
        median = ranked.size // 2
        index = ranked[median]
        node = self._node(data[index].copy(), ids[index], axis)
        node.left = self._build(data, ids, ranked[:median], depth + 1)
        node.right = self._build(data, ids, ranked[median + 1:], depth + 1)
        return node

    def _node(self, point: np.ndarray, point_id: int, axis: int) -> KdNode:
        if point_id in self._nodes:
            raise ValueError(f'Point id {point_id} is already in the tree')
        node = KdNode(point, point_id, axis)
        self._nodes[point_id] = node
        return node

    def insert(self, point: np.ndarray, point_id: Optional[int] = None) -> int:
        point = self.check_point(point).copy()
        point_id = self.claim_id(point_id)
        if self.root is None:
            self.root = self._node(point, point_id, 0)
            return point_id
        node = self.root
        while True:
            branch = 'left' if point[node.axis] < node.point[node.axis] else 'right'
            child = getattr(node, branch)
            if child is None:
                setattr(node, branch, self._node(point, point_id, (node.axis + 1) % self.dim))
                return point_id
            node = child

    def remove(self, point_id: int) -> None:
        node = self._nodes.pop(point_id, None)
        if node is None:
            raise KeyError(f'No point with id {point_id}')
        node.deleted = True

    def nearest(self, query: np.ndarray) -> Optional[Neighbor]:
        query = np.asarray(query, dtype=np.float64)
        if self.dim is not None and (query.ndim != 1 or query.shape[0] != self.dim):
            raise ShapeMismatchException(f'Expected a query of dimension {self.dim}, got shape {query.shape}')
        if not self._nodes:
            return None
        best: List = [math.inf, math.inf, None]
        self._search(self.root, query, best)
        node: KdNode = best[2]
        return Neighbor(node.point, best[0], node.point_id)

    def _search(self, node: Optional[KdNode], query: np.ndarray, best: List) -> None:
        if node is None:
            return
        if not node.deleted:
            distance = euclidean_distance(node.point, query)
            if distance < best[0] or (distance == best[0] and node.point_id < best[1]):
                best[0], best[1], best[2] = distance, node.point_id, node
        diff = query[node.axis] - node.point[node.axis]
        near, far = (node.left, node.right) if diff < 0 else (node.right, node.left)
        self._search(near, query, best)
        if abs(diff) - best[0] <= _PRUNE_SLACK * max(1.0, best[0]):
            self._search(far, query, best)

    def items(self) -> List[Tuple[int, np.ndarray]]:
        """In-order enumeration of live (id, point) pairs."""
        out: List[Tuple[int, np.ndarray]] = []
        stack: List[KdNode] = []
        node = self.root
        while stack or node is not None:
            while node is not None:
                stack.append(node)
                node = node.left
            node = stack.pop()
            if not node.deleted:
                out.append((node.point_id, node.point))
            node = node.right
        return out

    def depth(self) -> int:
        def _depth(node: Optional[KdNode]) -> int:
            return 0 if node is None else 1 + max(_depth(node.left), _depth(node.right))

        return _depth(self.root)

    def __len__(self) -> int:
        return len(self._nodes)
