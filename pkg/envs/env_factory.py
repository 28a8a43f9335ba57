#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# @Time    : 2026/9/5
# @Author  : .*?
# @File    : env_factory
# @Software: PyCharm
from typing import Dict, List, Type

from envs.base_env import BaseEnv
from exception.exception import ConfigRangeException


class EnvFactory:
    __envs: Dict[str, Type[BaseEnv]] = {}

    @classmethod
    def get_env(cls, name: str) -> Type[BaseEnv]:
        if name not in cls.__envs:
            raise ConfigRangeException('env', f'unknown environment {name!r}, choose from {cls.names()}')
        return cls.__envs[name]

    @classmethod
    def register(cls, name: str):
        if not name:
            raise ValueError('Must provide an environment name')

        def decorator(origin_cls: Type[BaseEnv]):
            if name in cls.__envs:
                raise ValueError(f'Environment {name!r} is already registered')
            cls.__envs[name] = origin_cls
            return origin_cls

        return decorator

    @classmethod
    def names(cls) -> List[str]:
        return sorted(cls.__envs)


def make_env(name: str) -> BaseEnv:
    return EnvFactory.get_env(str(name))()
