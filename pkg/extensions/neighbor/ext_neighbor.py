#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# @Time    : 2026/9/3
# @Author  : .*?
# @File    : ext_neighbor
# @Software: PyCharm
from domain.enums.neighbor_type import NeighborType
from extensions.neighbor.base_neighbor import BaseNeighborIndex


def get_neighbor_factory(neighbor_type: NeighborType) -> type[BaseNeighborIndex]:
    match neighbor_type:
        case NeighborType.KDTREE:
            from extensions.neighbor.kdtree import KdTree

            return KdTree
        case NeighborType.LINEAR:
            from extensions.neighbor.linear_scan import LinearScanIndex

            return LinearScanIndex
        case _:
            raise ValueError(f"Unknown neighbor index type: {neighbor_type}")
