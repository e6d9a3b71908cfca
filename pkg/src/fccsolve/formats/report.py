# SPDX-License-Identifier: GPL-3.0-or-later
# Copyright (C) 2025 South Patron LLC
# This file is part of fccsolve and licensed under the GPLv3+.
# See <https://www.gnu.org/licenses/> for details.

from __future__ import annotations

import io
import typing

from pydantic import BaseModel, Field, ValidationError

from ruamel.yaml import YAML
from ruamel.yaml.error import YAMLError

from ..core import exceptions as fex
from ..core.instance import ColoredInstance, compute_fairlet
from ..core.clustering import Clustering, is_fair
from ..core.result import SolveResult


class SolutionReport(BaseModel):
    """
    One solver run: what ran, with which parameters, and the clustering
    it found.
    """

    solver: str
    parameters: typing.Dict[str, typing.Optional[int]] = Field(
        default_factory=dict
    )
    cost: int
    clusters: typing.List[typing.List[int]]
    fair: bool
    wall_time: float = 0.0
    budget: typing.Optional[int] = None
    decision: typing.Optional[bool] = None
    instance: typing.Optional[str] = None

    class Config:
        extra = "forbid"
        frozen = True

    @classmethod
    def of(
        cls,
        result: SolveResult,
        instance: ColoredInstance,
        wall_time: float = 0.0,
        budget: typing.Optional[int] = None,
        source: typing.Optional[str] = None,
    ) -> SolutionReport:
        clustering = result.clustering.canonical()
        return cls(
            solver=result.solver,
            parameters=dict(result.parameters),
            cost=result.cost,
            clusters=[list(c) for c in clustering.clusters],
            fair=is_fair(clustering, compute_fairlet(instance), instance.chi),
            wall_time=wall_time,
            budget=budget,
            decision=None if budget is None else result.cost <= budget,
            instance=source,
        )

    def clustering(self) -> Clustering:
        return Clustering.of(self.clusters)

    def to_text(self) -> str:
        """
        The human-readable rendering printed by the solve command.
        """
        lines = [f"solver: {self.solver}"]
        if self.instance:
            lines.append(f"instance: {self.instance}")
        params = " ".join(f"{k}={v}" for k, v in self.parameters.items())
        lines.append(f"parameters: {params}")
        lines.append(f"cost: {self.cost}")
        if self.budget is not None:
            answer = "YES" if self.decision else "NO"
            lines.append(f"budget: {self.budget} -> {answer}")
        lines.append(f"fair: {self.fair}")
        lines.append(f"wall_time: {self.wall_time:.3f}s")
        for i, cluster in enumerate(self.clusters, start=1):
            lines.append(f"cluster {i}: {' '.join(str(v) for v in cluster)}")
        return "\n".join(lines) + "\n"


def _is_yaml(path: str) -> bool:
    return path.endswith((".yml", ".yaml"))


def dump_report(report: SolutionReport, path: str) -> str:
    """
    YAML for .yml/.yaml paths, JSON otherwise.
    """
    if _is_yaml(path):
        buf = io.StringIO()
        YAML().dump(report.model_dump(), buf)
        return buf.getvalue()
    return report.model_dump_json(indent=2) + "\n"


def write_report(report: SolutionReport, path: str) -> None:
    with open(path, "w") as fh:
        fh.write(dump_report(report, path))


def read_report(path: str) -> SolutionReport:
    with open(path, "r") as fh:
        text = fh.read()

    try:
        if _is_yaml(path):
            return SolutionReport.model_validate(YAML(typ="safe").load(text))
        return SolutionReport.model_validate_json(text)
    except YAMLError as ex:
        raise fex.ReportParseException(message=str(ex), source=path) from ex
    except ValidationError as ex:
        raise fex.ReportParseException(
            message="the report does not match the expected fields",
            errors=ex.errors(),
            source=path,
        ) from ex
