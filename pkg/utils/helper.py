#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# @Time    : 2026/9/4
# @Author  : .*?
# @File    : helper
# @Software: PyCharm
from hashlib import sha256
from typing import Iterable, List

import numpy as np


class Helper:

    @staticmethod
    def spawn_seeds(seed: int, count: int) -> List[int]:
        """Independent child seeds derived from one run seed."""
        children = np.random.SeedSequence(seed).spawn(count)
        return [int(child.generate_state(1)[0]) for child in children]

    @staticmethod
    def parameter_hash(arrays: Iterable[np.ndarray]) -> str:
        """SHA-256 over the raw bytes of every array, in order."""
        digest = sha256()
        for array in arrays:
            array = np.ascontiguousarray(array, dtype=np.float64)
            digest.update(str(array.shape).encode())
            digest.update(array.tobytes())
        return digest.hexdigest()
