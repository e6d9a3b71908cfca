# SPDX-License-Identifier: GPL-3.0-or-later
# Copyright (C) 2025 South Patron LLC
# This file is part of fccsolve and licensed under the GPLv3+.
# See <https://www.gnu.org/licenses/> for details.

from __future__ import annotations

import typing
import logging

from importlib.resources import files

from pydantic import BaseModel, Field, ValidationError

from ..exceptions import ConfigurationException
from .loader import Loader, find_config_file


DecompositionMode = typing.Literal["exact", "heuristic"]


class SolverSettings(BaseModel):
    """
    Caps and modes shared by the solvers, the decompositions and the
    benchmark harness.
    """

    oracle_cap: int = Field(default=12, ge=1)
    exact_treewidth_cap: int = Field(default=25, ge=1)
    exact_treedepth_cap: int = Field(default=20, ge=1)
    component_cap: int = Field(default=12, ge=1)
    treewidth_mode: DecompositionMode = "exact"
    treedepth_mode: DecompositionMode = "exact"
    bench_workers: int = Field(default=4, ge=1)
    bench_timeout: float = Field(default=60.0, gt=0)

    class Config:
        extra = "forbid"
        frozen = True

    @classmethod
    def load(cls, path: typing.Optional[str] = None) -> SolverSettings:
        """
        Reads the [solver] and [bench] sections of the first settings file
        found; an explicit path wins over the search path.
        """
        fname = (
            path
            or find_config_file("fccsolve.conf", "fccsolve")
            or str(files("fccsolve.data") / "fccsolve.conf")
        )
        logging.debug(f"Loading solver settings from {fname}")

        cfg = Loader(fname).load()

        values: typing.Dict[str, typing.Any] = {}
        values.update(cfg.getNamespace("solver").to_dict())
        for key, value in cfg.getNamespace("bench").to_dict().items():
            values[f"bench_{key}"] = value

        try:
            return cls(**values)
        except ValidationError as ex:
            raise ConfigurationException(
                f"Invalid settings in [{fname}]: {ex.errors()}"
            ) from ex

    def override(self, **kwargs: typing.Any) -> SolverSettings:
        """
        Returns a copy with every non-None keyword applied.
        """
        changes = {k: v for k, v in kwargs.items() if v is not None}
        if not changes:
            return self
        try:
            return SolverSettings(**{**self.model_dump(), **changes})
        except ValidationError as ex:
            raise ConfigurationException(
                f"Invalid setting override: {ex.errors()}"
            ) from ex
