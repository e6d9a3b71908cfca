# SPDX-License-Identifier: GPL-3.0-or-later
# Copyright (C) 2025 South Patron LLC
# This file is part of fccsolve and licensed under the GPLv3+.
# See <https://www.gnu.org/licenses/> for details.

from __future__ import annotations

import typing
import importlib

from pydantic import BaseModel, Field

from ..core import exceptions as fex
from ..core.config import SolverSettings
from ..core.instance import ColoredInstance
from ..core.result import SolveResult
from ..decomp.nice import NiceTreeDecomposition
from ..decomp.treedepth import TreedepthForest


class SolveContext(BaseModel):
    """
    Everything a solver may use beyond the instance. Decompositions left
    empty are computed by the solver itself.
    """

    settings: SolverSettings = Field(default_factory=SolverSettings)
    tree_decomposition: typing.Optional[NiceTreeDecomposition] = None
    forest: typing.Optional[TreedepthForest] = None
    gamma: typing.Optional[int] = None

    class Config:
        extra = "forbid"
        arbitrary_types_allowed = True


SolverFunc = typing.Callable[[ColoredInstance, SolveContext], SolveResult]


class SolverEntry(BaseModel):
    name: str
    func: SolverFunc
    description: str = ""


RegistryType = typing.Dict[str, SolverEntry]


# ----- Registry -------------------------------------------------------------


class SolverRegistry:

    def __new__(cls, *args, **kwargs):
        raise RuntimeError("Cannot instantiate SolverRegistry.")

    _registry: RegistryType = {}
    _catalogs: typing.List[str] = [
        "fccsolve.solvers.catalog",
    ]

    @classmethod
    def register(
        cls,
        name: str,
        description: str = "",
    ) -> typing.Callable[[SolverFunc], SolverFunc]:

        def wrapper(func: SolverFunc) -> SolverFunc:
            # NOTE: Re-registering a name replaces the entry
            cls._registry[name] = SolverEntry(
                name=name,
                func=func,
                description=description,
            )
            return func

        return wrapper

    @classmethod
    def registry(cls) -> RegistryType:
        cls._load_catalogs()
        return cls._registry

    @classmethod
    def names(cls) -> typing.List[str]:
        return list(cls.registry())

    @classmethod
    def get(cls, name: str) -> SolverEntry:
        if entry := cls.registry().get(name):
            return entry
        raise fex.RegistryException(name=name, known=cls.names())

    @classmethod
    def solve(
        cls,
        name: str,
        instance: ColoredInstance,
        context: typing.Optional[SolveContext] = None,
    ) -> SolveResult:
        entry = cls.get(name)
        return entry.func(instance, context or SolveContext())

    @classmethod
    def _load_catalogs(cls) -> None:
        for module_name in cls._catalogs:
            importlib.import_module(module_name)
