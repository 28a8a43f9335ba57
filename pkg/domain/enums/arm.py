#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# @Time    : 2026/9/4
# @Author  : .*?
# @File    : arm
# @Software: PyCharm
from enum import StrEnum


class Arm(StrEnum):
    EECL = "eecl"
    BASE = "base"
