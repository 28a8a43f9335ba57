#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# @Time    : 2026/9/8
# @Author  : .*?
# @File    : test_kdtree
# @Software: PyCharm
from collections import Counter

import numpy as np
import pytest

from exception.exception import ShapeMismatchException
from extensions.neighbor.base_neighbor import euclidean_distance
from extensions.neighbor.kdtree import KdTree
from extensions.neighbor.linear_scan import LinearScanIndex


def brute_force(points, query):
    best_id, best_distance = None, None
    for k, point in enumerate(points):
        distance = euclidean_distance(point, query)
        if best_distance is None or distance < best_distance:
            best_id, best_distance = k, distance
    return best_id, best_distance


def check_subtree_order(node):
    """Left coordinates <= node, right >= node, on the node's axis."""
    if node is None:
        return []
    left = check_subtree_order(node.left)
    right = check_subtree_order(node.right)
    for p in left:
        assert p[node.axis] <= node.point[node.axis]
    for p in right:
        assert p[node.axis] >= node.point[node.axis]
    return left + right + [node.point]


class TestBuild:
    def test_empty(self):
        tree = KdTree.build([])
        assert len(tree) == 0
        assert tree.nearest(np.zeros(2)) is None

    def test_root_is_median(self):
        tree = KdTree.build([np.array([0.0, 0.0]), np.array([1.0, 1.0]), np.array([2.0, 2.0])])
        assert tree.root.point.tolist() == [1.0, 1.0]
        assert tree.root.axis == 0

    def test_in_order_multiset(self):
        points = np.random.default_rng(5).normal(size=(500, 8))
        tree = KdTree.build(list(points))
        assert len(tree) == 500
        assert Counter(tuple(p) for p in tree.points()) == Counter(tuple(p) for p in points)
        assert sorted(point_id for point_id, _ in tree.items()) == list(range(500))

    def test_split_invariant(self):
        points = np.random.default_rng(6).integers(0, 4, size=(300, 3)).astype(float)
        tree = KdTree.build(list(points))
        check_subtree_order(tree.root)

    def test_balanced_depth(self):
        tree = KdTree.build(list(np.random.default_rng(7).normal(size=(1023, 2))))
        assert tree.depth() == 10

    def test_mixed_dimensions(self):
        with pytest.raises(ShapeMismatchException):
            KdTree.build([np.zeros(2), np.zeros(3)])


class TestNearest:
    def test_pythagorean(self):
        tree = KdTree.build([np.array([0.0, 0.0])])
        assert tree.nearest(np.array([3.0, 4.0])).distance == 5.0

    def test_stored_point(self):
        points = list(np.random.default_rng(1).normal(size=(50, 4)))
        tree = KdTree.build(points)
        neighbor = tree.nearest(points[17])
        assert neighbor.distance == 0.0
        assert neighbor.point_id == 17

    @pytest.mark.parametrize('dim', [2, 8, 16, 32])
    def test_matches_linear_scan(self, dim):
        rng = np.random.default_rng(dim)
        points = list(rng.normal(size=(1000, dim)))
        tree = KdTree.build(points)
        scan = LinearScanIndex.build(points)
        for query in rng.normal(size=(100, dim)):
            found, expected = tree.nearest(query), scan.nearest(query)
            assert found.distance == expected.distance
            assert found.point_id == expected.point_id
            assert (found.point_id, found.distance) == brute_force(points, query)

    def test_ties_resolve_to_earliest_id(self):
        rng = np.random.default_rng(9)
        points = list(rng.integers(0, 5, size=(200, 2)).astype(float))
        tree = KdTree.build(points)
        scan = LinearScanIndex.build(points)
        for query in rng.integers(0, 5, size=(100, 2)) + 0.5:
            found, expected = tree.nearest(query), scan.nearest(query)
            assert (found.point_id, found.distance) == (expected.point_id, expected.distance)

    def test_duplicate_points(self):
        tree = KdTree()
        for point_id in (4, 1, 7):
            tree.insert(np.array([1.0, 1.0]), point_id)
        assert tree.nearest(np.array([1.0, 1.0])).point_id == 1

    def test_query_dimension(self):
        tree = KdTree.build([np.zeros(3)])
        with pytest.raises(ShapeMismatchException):
            tree.nearest(np.zeros(2))


class TestMutation:
    def test_incremental_insert_matches_scan(self):
        rng = np.random.default_rng(3)
        tree, scan = KdTree(), LinearScanIndex()
        for point in rng.uniform(-1, 1, size=(400, 3)):
            assert tree.insert(point) == scan.insert(point)
        check_subtree_order(tree.root)
        for query in rng.uniform(-1, 1, size=(100, 3)):
            assert tree.nearest(query).point_id == scan.nearest(query).point_id

    def test_remove_hides_point(self):
        tree = KdTree.build([np.array([0.0]), np.array([1.0]), np.array([5.0])])
        tree.remove(1)
        neighbor = tree.nearest(np.array([1.1]))
        assert neighbor.point_id == 0
        assert len(tree) == 2
        assert sorted(point_id for point_id, _ in tree.items()) == [0, 2]

    def test_remove_everything(self):
        tree = KdTree.build([np.array([0.0, 1.0])])
        tree.remove(0)
        assert tree.nearest(np.zeros(2)) is None

    def test_remove_unknown(self):
        with pytest.raises(KeyError):
            KdTree.build([np.zeros(2)]).remove(3)

    def test_removal_matches_scan(self):
        rng = np.random.default_rng(4)
        points = list(rng.normal(size=(300, 4)))
        tree, scan = KdTree.build(points), LinearScanIndex.build(points)
        for point_id in rng.choice(300, size=150, replace=False):
            tree.remove(int(point_id))
            scan.remove(int(point_id))
        for query in rng.normal(size=(50, 4)):
            found, expected = tree.nearest(query), scan.nearest(query)
            assert (found.point_id, found.distance) == (expected.point_id, expected.distance)
