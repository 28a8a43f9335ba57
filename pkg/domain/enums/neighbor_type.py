#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# @Time    : 2026/9/2
# @Author  : .*?
# @File    : neighbor_type
# @Software: PyCharm
from enum import StrEnum


class NeighborType(StrEnum):
    KDTREE = "kdtree"
    LINEAR = "linear"
