#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# @Time    : 2026/9/8
# @Author  : .*?
# @File    : test_setting
# @Software: PyCharm
import os

import numpy as np

from constants.constants import Constants
from setting.setting import get_eecl_td3_settings
from utils.helper import Helper


class TestSettings:
    def test_dev_profile(self):
        settings = get_eecl_td3_settings()
        assert settings.application == Constants.Common.PROJECT_NAME
        assert settings.log.level == 'INFO'
        assert os.path.isabs(settings.output.dir)


class TestHelper:
    def test_spawn_seeds_stable(self):
        assert Helper.spawn_seeds(3, 4) == Helper.spawn_seeds(3, 4)
        assert len(set(Helper.spawn_seeds(3, 4))) == 4

    def test_parameter_hash(self):
        x = np.arange(6.0)
        assert Helper.parameter_hash([x]) == Helper.parameter_hash([x.copy()])
        assert Helper.parameter_hash([x]) != Helper.parameter_hash([x.reshape(2, 3)])
        y = x.copy()
        y[0] = 1e-300
        assert Helper.parameter_hash([x]) != Helper.parameter_hash([y])
