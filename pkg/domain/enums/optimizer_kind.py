#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# @Time    : 2026/9/2
# @Author  : .*?
# @File    : optimizer_kind
# @Software: PyCharm
from enum import StrEnum


class OptimizerKind(StrEnum):
    ADAM = "adam"
    ADAMW = "adamw"
