# SPDX-License-Identifier: GPL-3.0-or-later
# Copyright (C) 2025 South Patron LLC
# This file is part of fccsolve and licensed under the GPLv3+.
# See <https://www.gnu.org/licenses/> for details.

import os
import typing

from configparser import ConfigParser, BasicInterpolation, Error

from ..exceptions import ConfigurationException

from .config import Config


class EnvInterpolation(BasicInterpolation):
    """Interpolation which expands environment variables in values."""

    def before_get(self, parser, section, option, value, defaults):
        value = super().before_get(parser, section, option, value, defaults)
        return os.path.expandvars(value)


class Loader:
    """
    Reads an INI settings file. Values in [defaults] apply to every other
    section; each section becomes a namespace of the returned Config.
    """

    _reserved_words: typing.List[str] = [
        "defaults",
    ]

    def __init__(self, filename: str) -> None:
        self._filename: str = filename

    def load(self) -> Config:
        cfg = self._load(self._filename)
        defaults = self._getsection(cfg, "defaults", False)

        rc: typing.Dict[str, typing.Dict[str, str]] = {}
        for section in cfg.sections():
            if section in self._reserved_words:
                continue
            merged = dict(defaults)
            merged.update(self._getsection(cfg, section))
            merged.pop("cwd", None)
            rc[section] = merged

        return Config(rc)

    def _load(self, filename: str) -> ConfigParser:
        configpath = os.path.dirname(os.path.abspath(filename))
        sysconfig = ConfigParser(
            defaults={
                "cwd": configpath,
            },
            interpolation=EnvInterpolation(),
        )
        try:
            num = sysconfig.read(filename)
        except Error as ex:
            raise ConfigurationException(
                f"Unable to parse configuration file: [{filename}]"
            ) from ex

        if len(num) != 1:
            raise ConfigurationException(
                f"Unable to read configuration file: [{filename}]"
            )

        return sysconfig

    def _getsection(
        self,
        cfg: ConfigParser,
        section: str,
        required: bool = True,
    ) -> typing.Dict:
        if not cfg.has_section(section):
            if required:
                raise ConfigurationException(f"Missing section: [{section}]")
            return dict()
        return {k: cfg.get(section, k) for k in cfg.options(section)}


def find_config_file(filename: str, appname: str) -> typing.Optional[str]:
    home: str = os.path.expanduser("~")

    search_paths = [
        os.path.join(home, f".{appname}", filename),
        os.path.join(home, ".config", appname, filename),
        os.path.join("/etc", appname, filename),
    ]
    for path in search_paths:
        if os.path.exists(path):
            return path

    return None
