# SPDX-License-Identifier: GPL-3.0-or-later
# Copyright (C) 2025 South Patron LLC
# This file is part of fccsolve and licensed under the GPLv3+.
# See <https://www.gnu.org/licenses/> for details.

from __future__ import annotations

from ..core.instance import ColoredInstance, compute_fairlet
from ..core.result import SolveResult
from ..oracle import brute_force_optimum
from .registry import SolveContext, SolverRegistry
from .vertex_cover import solve_vc
from .treewidth import solve_tw_fpt2, solve_tw_xp
from .treedepth import solve_td


@SolverRegistry.register(
    "oracle",
    "exhaustive search over fair partitions, capped by oracle_cap",
)
def oracle(instance: ColoredInstance, context: SolveContext) -> SolveResult:
    cost, clustering = brute_force_optimum(instance, context.settings.oracle_cap)
    fairlet = compute_fairlet(instance)
    return SolveResult(
        cost=cost,
        clustering=clustering,
        solver="oracle",
        parameters={"n": instance.n, "c": fairlet.size, "kappa": fairlet.kappa},
    )


@SolverRegistry.register(
    "vc",
    "branching over a minimum vertex cover with saturating matchings",
)
def vertex_cover(instance: ColoredInstance, context: SolveContext) -> SolveResult:
    return solve_vc(instance)


@SolverRegistry.register(
    "tw-xp",
    "dynamic program over a nice tree decomposition",
)
def treewidth_xp(instance: ColoredInstance, context: SolveContext) -> SolveResult:
    return solve_tw_xp(instance, context.tree_decomposition, context.settings)


@SolverRegistry.register(
    "tw-fpt2",
    "tree decomposition program restricted to fairlets of size at most 2",
)
def treewidth_fpt2(
    instance: ColoredInstance,
    context: SolveContext,
) -> SolveResult:
    return solve_tw_fpt2(instance, context.tree_decomposition, context.settings)


@SolverRegistry.register(
    "td",
    "type reduction over a treedepth forest and a component program",
)
def treedepth(instance: ColoredInstance, context: SolveContext) -> SolveResult:
    return solve_td(
        instance,
        gamma=context.gamma,
        forest=context.forest,
        settings=context.settings,
    )
