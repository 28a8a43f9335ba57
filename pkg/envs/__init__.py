#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# @Time    : 2026/9/5
# @Author  : .*?
# @File    : __init__.py
# @Software: PyCharm
# importing the task modules registers them with EnvFactory
from envs import planar_arm_lift, point_mass_reach  # noqa: F401
