# SPDX-License-Identifier: GPL-3.0-or-later
# Copyright (C) 2025 South Patron LLC
# This file is part of fccsolve and licensed under the GPLv3+.
# See <https://www.gnu.org/licenses/> for details.

from __future__ import annotations

import typing
import math
import logging

from ...core import exceptions as fex
from ...core.config import SolverSettings
from ...core.instance import ColoredInstance, FairletVector, compute_fairlet
from ...core.clustering import Clustering, clustering_cost
from ...core.result import SolveResult
from ...decomp.nice import NiceTreeDecomposition, NodeKind, to_nice, validate_nice
from ...decomp.tree_decomposition import tree_decomposition
from .records import ColorVector, DPParams, DPRecord, DPTable
from .transitions import (
    leaf_table,
    process_forget,
    process_introduce,
    process_join,
)


def size_guesses(
    fairlet: FairletVector,
    width: int,
    n: int,
) -> typing.Tuple[int, ...]:
    """
    Multiples c·d of the fairlet size for d up to max(1, ceil(24w/c)),
    never above n.
    """
    c = fairlet.size
    top = max(1, math.ceil(24 * width / c))
    return tuple(c * d for d in range(1, top + 1) if c * d <= n)


def _demand(record: DPRecord, params: DPParams) -> typing.List[int]:
    """
    Per color, how many vertices not yet introduced the record's
    unfinished clusters still need.
    """
    need = [0] * params.fairlet.kappa
    for entry, mult in record.open:
        cap = params.capacity(entry.size)
        for i in range(len(need)):
            need[i] += mult * (cap[i] - entry.colorvec[i])
    for entry in record.current:
        cap = params.capacity(entry.size)
        held = params.bag_counts(entry.bagset)
        for i in range(len(need)):
            need[i] += cap[i] - held[i] - entry.colorvec[i]
    return need


def _admissible(record: DPRecord, future: ColorVector, params: DPParams) -> bool:
    if any(x > f for x, f in zip(_demand(record, params), future)):
        return False

    if params.fpt2:
        if params.fairlet.size == 1 and record.open:
            return False
        if params.fairlet.size == 2 and any(
            e.size != 2 for e, _ in record.open
        ):
            return False

    return True


def prune_table(
    table: DPTable,
    future: ColorVector,
    params: DPParams,
) -> DPTable:
    """
    Drops records that the vertices not yet seen (`future`, per color)
    cannot complete. The restricted variant also drops open clusters it
    never needs: all of them for singleton fairlets, and all but lone
    vertices of size-two clusters for pair fairlets.
    """
    kept = DPTable()
    for record in table:
        if _admissible(record, future, params):
            kept.offer(record)

    if params.fpt2 and params.fairlet.size == 2:
        assert all(
            e.size == 2 and sum(e.colorvec) == 1
            for record in kept
            for e, _ in record.open
        ), "pair-fairlet records only keep lone open vertices"

    return kept


def _nice_decomposition(
    instance: ColoredInstance,
    nice_td: typing.Optional[NiceTreeDecomposition],
    settings: SolverSettings,
) -> NiceTreeDecomposition:
    graph = instance.to_networkx()
    if nice_td is not None:
        validate_nice(graph, nice_td)
        return nice_td

    td = tree_decomposition(
        graph,
        settings.treewidth_mode,
        exact_cap=settings.exact_treewidth_cap,
    )
    return to_nice(td, graph)


def _run(
    instance: ColoredInstance,
    nice_td: typing.Optional[NiceTreeDecomposition],
    settings: typing.Optional[SolverSettings],
    fpt2: bool,
) -> SolveResult:
    solver = "tw-fpt2" if fpt2 else "tw-xp"
    fairlet = compute_fairlet(instance)

    if fpt2 and fairlet.size > 2:
        raise fex.ParameterException(
            parameter="fairlet size",
            reason=f"fairlet {fairlet.counts} has size {fairlet.size}, above 2",
            hint="use the tw-xp solver for larger fairlets",
            solver=solver,
        )

    settings = settings or SolverSettings()
    nice = _nice_decomposition(instance, nice_td, settings)
    width = max(nice.width, 0)

    params = DPParams(
        instance=instance,
        fairlet=fairlet,
        sizes=size_guesses(fairlet, width, instance.n),
        width=width,
        fpt2=fpt2,
    )
    logging.debug(
        f"{solver}: width {width}, cluster sizes {list(params.sizes)}"
    )

    totals = instance.color_counts()
    below = nice.subtree_vertices()
    tables: typing.Dict[int, DPTable] = {}
    largest = 0

    for node in nice.postorder():
        assert node.vertex is not None or node.kind == NodeKind.JOIN
        match node.kind:
            case NodeKind.LEAF:
                table = leaf_table(node.vertex, params)
            case NodeKind.INTRODUCE:
                table = process_introduce(
                    tables.pop(node.children[0]), node.vertex, params
                )
            case NodeKind.FORGET:
                table = process_forget(
                    tables.pop(node.children[0]), node.vertex, params
                )
            case NodeKind.JOIN:
                table = process_join(
                    tables.pop(node.children[0]),
                    tables.pop(node.children[1]),
                    params,
                )

        seen = instance.color_counts(below[node.id])
        future = tuple(t - s for t, s in zip(totals, seen))
        tables[node.id] = prune_table(table, future, params)
        largest = max(largest, len(tables[node.id]))

    root = tables[nice.root]
    best: typing.Optional[DPRecord] = None
    for record in root:
        assert not record.open and not record.current, "root records are done"
        if best is None or record.cost < best.cost:
            best = record
    assert best is not None, "the whole vertex set is one fair cluster"

    clustering = Clustering.of(best.witness.closed)
    assert clustering_cost(instance, clustering) == best.cost
    logging.debug(
        f"{solver}: optimum {best.cost}, largest table {largest} records"
    )

    return SolveResult(
        cost=best.cost,
        clustering=clustering,
        solver=solver,
        parameters={
            "tw": width,
            "c": fairlet.size,
            "kappa": fairlet.kappa,
        },
    )


# ----- Operations -----------------------------------------------------------


def solve_tw_xp(
    instance: ColoredInstance,
    nice_td: typing.Optional[NiceTreeDecomposition] = None,
    settings: typing.Optional[SolverSettings] = None,
) -> SolveResult:
    """
    Exact optimum by dynamic programming over a nice tree decomposition,
    computed from the settings when none is given.
    """
    return _run(instance, nice_td, settings, fpt2=False)


def solve_tw_fpt2(
    instance: ColoredInstance,
    nice_td: typing.Optional[NiceTreeDecomposition] = None,
    settings: typing.Optional[SolverSettings] = None,
) -> SolveResult:
    """
    The same program for fairlets of size one or two, keeping only records
    whose open clusters can belong to an optimum with connected clusters
    (size one) or with connected clusters beyond pairs (size two).
    """
    return _run(instance, nice_td, settings, fpt2=True)
