#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# @Time    : 2026/9/2
# @Author  : .*?
# @File    : __init__.py
# @Software: PyCharm
