# SPDX-License-Identifier: GPL-3.0-or-later
# Copyright (C) 2025 South Patron LLC
# This file is part of fccsolve and licensed under the GPLv3+.
# See <https://www.gnu.org/licenses/> for details.

from __future__ import annotations

import typing

from dotty_dict import dotty, Dotty

from ..exceptions import ConfigurationException


class Config:
    """
    Dotted-key access to the merged sections of a settings file, for
    example `solver.oracle_cap`.
    """

    def __init__(self, kvp: typing.Optional[typing.Dict] = None) -> None:
        self._kvp: Dotty = dotty(kvp or {})

    def has(self, key: str) -> bool:
        return key in self._kvp

    def getStr(self, key: str) -> str:
        if key not in self._kvp:
            raise ConfigurationException(f"Missing option: {key}")
        return str(self._kvp[key])

    def getInt(self, key: str) -> int:
        try:
            return int(self.getStr(key))
        except ValueError as ex:
            raise ConfigurationException(
                f"Option {key} is not an integer: {self._kvp[key]}"
            ) from ex

    def getFloat(self, key: str) -> float:
        try:
            return float(self.getStr(key))
        except ValueError as ex:
            raise ConfigurationException(
                f"Option {key} is not a number: {self._kvp[key]}"
            ) from ex

    def getBool(self, key: str) -> bool:
        return self.getStr(key).lower() in ["true", "yes", "1", "on", "y"]

    def getNamespace(self, namespace: str) -> Config:
        if namespace not in self._kvp:
            return Config()
        return Config(dict(self._kvp[namespace]))

    def to_dict(self) -> typing.Dict[str, typing.Any]:
        return self._kvp.to_dict()
