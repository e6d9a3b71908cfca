# SPDX-License-Identifier: GPL-3.0-or-later
# Copyright (C) 2025 South Patron LLC
# This file is part of fccsolve and licensed under the GPLv3+.
# See <https://www.gnu.org/licenses/> for details.

from __future__ import annotations

import typing
import logging

from ... import bip
from ...core.config import SolverSettings
from ...core.instance import ColoredInstance, FairletVector, compute_fairlet
from ...core.clustering import (
    Clustering,
    Cost,
    clustering_cost,
    fairlet_tiling,
    max_cluster_size_bound,
)
from ...core.result import SolveResult
from ...decomp.treedepth import TreedepthForest, treedepth_forest
from .classes import component_classes
from .program import build_program, realize
from .reduction import ReducedInstance, reduce_by_types


def default_gamma(forest: TreedepthForest, fairlet: FairletVector) -> int:
    return max_cluster_size_bound(forest.height, fairlet.size)


def _forest(
    instance: ColoredInstance,
    forest: typing.Optional[TreedepthForest],
    settings: SolverSettings,
) -> TreedepthForest:
    graph = instance.to_networkx()
    if forest is not None:
        return treedepth_forest(graph, "file", source=forest)
    return treedepth_forest(
        graph,
        settings.treedepth_mode,
        exact_cap=settings.exact_treedepth_cap,
    )


def solve_bounded_components(
    instance: ColoredInstance,
    gamma: int,
    budget: typing.Optional[int] = None,
    settings: typing.Optional[SolverSettings] = None,
) -> typing.Optional[typing.Tuple[Cost, Clustering]]:
    """
    Optimum over fair clusterings with clusters of at most gamma vertices,
    found through the component program; None when there is none (within
    the budget, when one is given).
    """
    settings = settings or SolverSettings()
    fairlet = compute_fairlet(instance)
    if gamma < fairlet.size:
        return None

    if budget is None:
        budget = clustering_cost(instance, fairlet_tiling(instance, None, fairlet))

    classes = component_classes(instance, settings.component_cap)
    model = build_program(classes, fairlet, gamma, budget)

    solution = bip.solve(model.program, upper_bound=budget)
    if solution is None:
        return None

    clustering = realize(model, solution)
    assert clustering_cost(instance, clustering) == solution.objective
    return solution.objective, clustering


class _Pipeline:
    """
    The reduction and the component classes depend only on the instance,
    the forest and gamma, so a run of decisions shares them.
    """

    def __init__(
        self,
        instance: ColoredInstance,
        forest: TreedepthForest,
        gamma: int,
        settings: SolverSettings,
    ) -> None:
        self.instance = instance
        self.gamma = gamma
        self.settings = settings
        self.reduced: ReducedInstance = reduce_by_types(
            instance.with_budget(None), forest, gamma
        )

    @property
    def removed(self) -> int:
        return len(self.reduced.removed)

    def decide(self, budget: int) -> typing.Optional[Clustering]:
        rest = budget - self.removed
        if rest < 0:
            logging.debug(f"Budget {budget} rejected by the type reduction")
            return None

        rc = solve_bounded_components(
            self.reduced.instance,
            self.gamma,
            rest,
            self.settings,
        )
        if rc is None:
            return None

        clustering = rc[1]
        assert clustering_cost(self.instance, clustering) <= budget
        return clustering


# ----- Operations -----------------------------------------------------------


def decide_td(
    instance: ColoredInstance,
    budget: int,
    gamma: typing.Optional[int] = None,
    forest: typing.Optional[TreedepthForest] = None,
    settings: typing.Optional[SolverSettings] = None,
) -> typing.Optional[Clustering]:
    """
    A fair clustering of cost at most budget, or None.
    """
    settings = settings or SolverSettings()
    forest = _forest(instance, forest, settings)
    gamma = gamma or default_gamma(forest, compute_fairlet(instance))
    return _Pipeline(instance, forest, gamma, settings).decide(budget)


def solve_td(
    instance: ColoredInstance,
    gamma: typing.Optional[int] = None,
    forest: typing.Optional[TreedepthForest] = None,
    settings: typing.Optional[SolverSettings] = None,
) -> SolveResult:
    """
    Binary search on the budget over the decision pipeline, starting from
    the cost of the fairlet tiling.
    """
    settings = settings or SolverSettings()
    fairlet = compute_fairlet(instance)
    forest = _forest(instance, forest, settings)
    gamma = gamma or default_gamma(forest, fairlet)
    pipeline = _Pipeline(instance, forest, gamma, settings)

    best = fairlet_tiling(instance, None, fairlet)
    lo, hi = 0, clustering_cost(instance, best)

    while lo < hi:
        mid = (lo + hi) // 2
        found = pipeline.decide(mid)
        if found is None:
            lo = mid + 1
        else:
            best = found
            hi = clustering_cost(instance, found)

    logging.debug(
        f"td: optimum {hi} with gamma={gamma}, height {forest.height}, "
        f"{pipeline.removed} edges reduced"
    )

    return SolveResult(
        cost=hi,
        clustering=best,
        solver="td",
        parameters={
            "td": forest.height,
            "gamma": gamma,
            "c": fairlet.size,
            "kappa": fairlet.kappa,
        },
    )
