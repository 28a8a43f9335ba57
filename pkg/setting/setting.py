#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# @Time    : 2026/9/2
# @Author  : .*?
# @File    : setting
# @Software: PyCharm
import os.path
from functools import lru_cache
from typing import Type

from pydantic import BaseModel, Field, model_validator
from pydantic_settings import BaseSettings, SettingsConfigDict, PydanticBaseSettingsSource, YamlConfigSettingsSource

from constants.constants import Constants


class LogSettings(BaseModel):
    level: str = Field(default="INFO")
    file: bool = Field(default=False)
    debug: bool = Field(default=False)


class OutputSettings(BaseModel):
    dir: str = Field(default=Constants.Path.OUTPUT_PATH)

    @model_validator(mode='after')
    def handle_path(self):
        if not os.path.isabs(self.dir):
            self.dir = os.path.join(Constants.Path.ROOT_PATH, self.dir)
        return self


class EeclTd3Settings(BaseModel):
    application: str = Field(default=Constants.Common.PROJECT_NAME)
    log: LogSettings = Field(default_factory=LogSettings)
    output: OutputSettings = Field(default_factory=OutputSettings)


class AppSettings(BaseSettings):
    eecl_td3: EeclTd3Settings = Field(default_factory=EeclTd3Settings, alias='eecl-td3')

    model_config = SettingsConfigDict(
        yaml_file=Constants.Path.get_yaml_file_path(),
        yaml_file_encoding='utf-8',
        extra='ignore'
    )

    @classmethod
    def settings_customise_sources(
            cls,
            settings_cls: Type[BaseSettings],
            init_settings: PydanticBaseSettingsSource,
            env_settings: PydanticBaseSettingsSource,
            dotenv_settings: PydanticBaseSettingsSource,
            file_secret_settings: PydanticBaseSettingsSource,
    ) -> tuple[PydanticBaseSettingsSource, ...]:
        return (
            init_settings,
            YamlConfigSettingsSource(settings_cls),
            env_settings,
            dotenv_settings,
            file_secret_settings,
        )


@lru_cache
def get_eecl_td3_settings() -> EeclTd3Settings:
    app_settings = AppSettings()
    return app_settings.eecl_td3


if __name__ == '__main__':
    settings = get_eecl_td3_settings()
    print(settings.model_dump_json(indent=4))
