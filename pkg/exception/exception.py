#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# @Time    : 2026/9/2
# @Author  : .*?
# @File    : exception
# @Software: PyCharm


class CommonException(Exception):
    def __init__(self, message=''):
        self.message = message
        super().__init__(self.message)

    def __str__(self):
        return self.message

    def __repr__(self):
        return self.message


class ConfigException(CommonException):
    ...


class ConfigFileNotFoundException(ConfigException):
    ...


class ConfigSyntaxException(ConfigException):
    ...


class UnknownConfigKeyException(ConfigException):
    def __init__(self, key: str):
        self.key = key
        super().__init__(f"Unknown config key: '{key}'")

    def __reduce__(self):
        return type(self), (self.key,)


class ConfigRangeException(ConfigException):
    def __init__(self, field: str, reason: str):
        self.field = field
        self.reason = reason
        super().__init__(f"Invalid value for '{field}': {reason}")

    def __reduce__(self):
        return type(self), (self.field, self.reason)


class ShapeMismatchException(CommonException):
    ...


class NonFiniteException(CommonException):
    ...


class EnvironmentDoneException(CommonException):
    ...


class CheckpointException(CommonException):
    ...


class CheckpointVersionException(CheckpointException):
    ...


class CheckpointCorruptException(CheckpointException):
    ...
