#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# @Time    : 2026/9/2
# @Author  : .*?
# @File    : env_name
# @Software: PyCharm
from enum import StrEnum


class EnvName(StrEnum):
    POINTMASS = "pointmass"
    ARMLIFT = "armlift"
