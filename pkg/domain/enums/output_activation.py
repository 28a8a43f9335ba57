#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# @Time    : 2026/9/2
# @Author  : .*?
# @File    : output_activation
# @Software: PyCharm
from enum import StrEnum


class OutputActivation(StrEnum):
    IDENTITY = "identity"
    SCALED_TANH = "scaled_tanh"
