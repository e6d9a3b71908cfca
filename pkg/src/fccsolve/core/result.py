# SPDX-License-Identifier: GPL-3.0-or-later
# Copyright (C) 2025 South Patron LLC
# This file is part of fccsolve and licensed under the GPLv3+.
# See <https://www.gnu.org/licenses/> for details.

from __future__ import annotations

import typing

from pydantic import BaseModel, Field

from .clustering import Clustering, Cost


class SolveResult(BaseModel):
    """
    The optimum found by a solver together with one witness clustering.
    """

    cost: Cost
    clustering: Clustering
    solver: str
    parameters: typing.Dict[str, typing.Optional[int]] = Field(
        default_factory=dict
    )

    class Config:
        extra = "forbid"
        frozen = True


def decide(result: SolveResult, budget: int) -> bool:
    return result.cost <= budget
