#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# @Time    : 2026/9/7
# @Author  : .*?
# @File    : result
# @Software: PyCharm

from pydantic import BaseModel

from constants.constants import Constants
from exception.exception import ConfigException


class Result[T](BaseModel):
    """Envelope printed by every CLI command; ``code`` doubles as the process exit status."""
    code: int
    message: str
    data: T | None = None
    success: bool

    @classmethod
    def ok(cls, data: T | None = None, message: str = 'Success'):
        return cls(code=Constants.ExitCode.SUCCESS, message=message, data=data, success=True)

    @classmethod
    def failed(cls, code: int = Constants.ExitCode.RUNTIME_ERROR, message: str = 'Runtime Error'):
        return cls(code=code, message=message, success=False)

    @classmethod
    def from_exception(cls, e: Exception):
        if isinstance(e, ConfigException):
            return cls.failed(code=Constants.ExitCode.CONFIG_ERROR, message=str(e))
        return cls.failed(message=str(e) or type(e).__name__)
