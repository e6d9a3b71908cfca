# SPDX-License-Identifier: GPL-3.0-or-later
# Copyright (C) 2025 South Patron LLC
# This file is part of fccsolve and licensed under the GPLv3+.
# See <https://www.gnu.org/licenses/> for details.

from __future__ import annotations

import typing
import logging

from collections import defaultdict
from dataclasses import dataclass, field

from ...core.instance import ColoredInstance, Edge
from ...decomp.treedepth import TreedepthForest


TypeCode = typing.Tuple[typing.Any, ...]


@dataclass(frozen=True, order=True)
class VertexType:
    """
    Color, depths of the adjacent ancestors, and the sorted codes of the
    children. Equal codes at equal depth mean isomorphic annotated
    subtrees.
    """

    code: TypeCode


@dataclass
class ReducedInstance:
    instance: ColoredInstance
    budget: typing.Optional[int]
    removed: typing.List[Edge] = field(default_factory=list)
    forest: TreedepthForest = field(default_factory=TreedepthForest)
    rejected: bool = False


def _codes(
    adj: typing.Dict[int, typing.Set[int]],
    forest: TreedepthForest,
    chi: typing.Dict[int, int],
) -> typing.Dict[int, TypeCode]:
    depth = forest.depth()
    kids = forest.children()
    codes: typing.Dict[int, TypeCode] = {}

    for v in sorted(depth, key=lambda u: (-depth[u], u)):
        up = tuple(sorted(depth[a] for a in forest.ancestors(v) if a in adj[v]))
        below = tuple(sorted(codes[c] for c in kids[v]))
        codes[v] = (chi[v], up, below)

    return codes


def vertex_types(
    instance: ColoredInstance,
    forest: TreedepthForest,
) -> typing.Dict[int, VertexType]:
    adj = {v: set(instance.neighbors(v)) for v in instance.vertices}
    return {
        v: VertexType(code)
        for v, code in _codes(adj, forest, instance.chi).items()
    }


def reduce_by_types(
    instance: ColoredInstance,
    forest: TreedepthForest,
    gamma: int,
) -> ReducedInstance:
    """
    Layer by layer from the deepest, keeps the gamma lowest-indexed
    children of each parent per type and deletes every edge between a
    dropped vertex and its ancestors, one unit of budget per edge. A
    dropped vertex leaves its parent in the forest once nothing in its
    subtree is adjacent to its former ancestors.

    Without a budget on the instance nothing is ever rejected.
    """
    if gamma < 1:
        raise ValueError(f"gamma must be positive, got {gamma}")

    adj = {v: set(instance.neighbors(v)) for v in instance.vertices}
    work = forest.copy()
    layers = forest.depth()
    budget = instance.budget
    removed: typing.List[Edge] = []

    for layer in range(max(layers.values(), default=0), 0, -1):
        codes = _codes(adj, work, instance.chi)

        groups: typing.Dict[typing.Any, typing.List[int]] = defaultdict(list)
        for v in sorted(u for u, d in layers.items() if d == layer):
            groups[(work.parent[v], codes[v])].append(v)

        for members in groups.values():
            for w in members[gamma:]:
                above = work.ancestors(w)
                for a in sorted(a for a in above if a in adj[w]):
                    adj[w].discard(a)
                    adj[a].discard(w)
                    removed.append((min(a, w), max(a, w)))
                    if budget is not None:
                        budget -= 1

                reach = set(above)
                if not any(adj[u] & reach for u in work.subtree(w)):
                    work.parent[w] = None

        if budget is not None and budget < 0:
            logging.debug(
                f"Type reduction rejected at layer {layer}: budget {budget}"
            )
            return ReducedInstance(
                instance=instance,
                budget=budget,
                removed=removed,
                forest=work,
                rejected=True,
            )

    logging.debug(
        f"Type reduction with gamma={gamma} removed {len(removed)} edges"
    )

    reduced = instance.with_edges(sorted(set(instance.edges) - set(removed)))
    return ReducedInstance(
        instance=reduced.with_budget(budget),
        budget=budget,
        removed=removed,
        forest=work,
    )
