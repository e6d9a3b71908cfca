# SPDX-License-Identifier: GPL-3.0-or-later
# Copyright (C) 2025 South Patron LLC
# This file is part of fccsolve and licensed under the GPLv3+.
# See <https://www.gnu.org/licenses/> for details.

from __future__ import annotations

import typing
import logging

from dataclasses import dataclass

from ..core.instance import ColoredInstance, FairletVector, compute_fairlet
from ..core.clustering import (
    Clustering,
    clustering_cost,
    fairlet_tiling,
    max_cluster_size_bound,
)
from ..core.result import SolveResult
from ..decomp.vertex_cover import min_vertex_cover
from ..matching.spots import Spot, SpotGraph, max_weight_saturating_matching


@dataclass(frozen=True)
class PreClustering:
    """
    A partition of the vertex cover with a guessed final size per part.
    """

    parts: typing.Tuple[typing.Tuple[int, ...], ...]
    sizes: typing.Tuple[int, ...]


def _set_partitions(
    items: typing.Sequence[int],
) -> typing.Iterator[typing.List[typing.List[int]]]:
    """
    Restricted-growth order.
    """
    blocks: typing.List[typing.List[int]] = []

    def extend(i: int) -> typing.Iterator[typing.List[typing.List[int]]]:
        if i == len(items):
            yield [list(b) for b in blocks]
            return
        for b in range(len(blocks) + 1):
            if b == len(blocks):
                blocks.append([])
            blocks[b].append(items[i])
            yield from extend(i + 1)
            blocks[b].pop()
            if not blocks[b]:
                blocks.pop()

    yield from extend(0)


def enumerate_preclusterings(
    cover: typing.Iterable[int],
    instance: ColoredInstance,
    fairlet: typing.Optional[FairletVector] = None,
) -> typing.Iterator[PreClustering]:
    """
    Every partition of the cover crossed with every feasible size guess.
    Sizes are multiples of the fairlet size up to min(n, max(24k, c)),
    each part fits its size color by color, and the guessed clusters
    together fit the instance's color counts.
    """
    fairlet = fairlet or compute_fairlet(instance)
    members = sorted(cover)
    top = min(
        instance.n,
        max_cluster_size_bound(len(members), fairlet.size),
    )
    d_max = top // fairlet.size
    totals = instance.color_counts()

    for parts in _set_partitions(members):
        counts = [instance.color_counts(p) for p in parts]
        d_min = [fairlet.min_multiplier(c) for c in counts]

        chosen: typing.List[int] = []
        used = [0] * fairlet.kappa

        def assign(j: int) -> typing.Iterator[PreClustering]:
            if j == len(parts):
                yield PreClustering(
                    parts=tuple(tuple(p) for p in parts),
                    sizes=tuple(d * fairlet.size for d in chosen),
                )
                return
            for d in range(d_min[j], d_max + 1):
                demand = fairlet.scaled(d)
                if any(u + x > t for u, x, t in zip(used, demand, totals)):
                    break
                chosen.append(d)
                for i, x in enumerate(demand):
                    used[i] += x
                yield from assign(j + 1)
                for i, x in enumerate(demand):
                    used[i] -= x
                chosen.pop()

        yield from assign(0)


def build_spot_graph(
    pre: PreClustering,
    instance: ColoredInstance,
    fairlet: typing.Optional[FairletVector] = None,
    cover: typing.Optional[typing.Iterable[int]] = None,
) -> SpotGraph:
    """
    One spot per missing color slot of each part. A spot's weight towards
    a non-cover vertex of its color is that vertex's neighbor count inside
    the owning part.
    """
    fairlet = fairlet or compute_fairlet(instance)
    in_cover = set(cover) if cover is not None else set()
    for p in pre.parts:
        in_cover.update(p)
    right = tuple(v for v in instance.vertices if v not in in_cover)

    left: typing.List[Spot] = []
    for owner, (part, size) in enumerate(zip(pre.parts, pre.sizes)):
        d = size // fairlet.size
        have = instance.color_counts(part)
        for color, (c, x) in enumerate(zip(fairlet.counts, have), start=1):
            left.extend(Spot(color=color, owner=owner) for _ in range(c * d - x))

    part_sets = [set(p) for p in pre.parts]
    weights: typing.Dict[typing.Tuple[int, int], int] = {}
    for s, spot in enumerate(left):
        for v in right:
            if instance.color(v) != spot.color:
                continue
            w = len(instance.neighbors(v) & part_sets[spot.owner])
            if w:
                weights[(s, v)] = w

    return SpotGraph(
        left=tuple(left),
        right=right,
        right_colors={v: instance.color(v) for v in right},
        weights=weights,
    )


def solve_vc(
    instance: ColoredInstance,
    cover: typing.Optional[typing.Iterable[int]] = None,
) -> SolveResult:
    """
    Branches over pre-clusterings of a minimum vertex cover, fills each
    part by a maximum-weight saturating matching and tiles the leftover
    vertices into fairlets.
    """
    fairlet = compute_fairlet(instance)
    if cover is None:
        cover = min_vertex_cover(instance.to_networkx()).cover
    members = sorted(cover)
    logging.debug(f"Vertex cover solver with k={len(members)}")

    best: typing.Optional[typing.Tuple[int, Clustering]] = None
    branches = 0

    for pre in enumerate_preclusterings(members, instance, fairlet):
        branches += 1
        spots = build_spot_graph(pre, instance, fairlet, members)
        matching = max_weight_saturating_matching(spots)
        if matching is None:
            continue

        groups = [list(p) for p in pre.parts]
        for s, v in matching.assignment.items():
            groups[spots.left[s].owner].append(v)

        placed = set(members) | set(matching.assignment.values())
        leftover = [v for v in instance.vertices if v not in placed]
        assert not leftover or fairlet.multiple_of(
            instance.color_counts(leftover)
        ), "leftover colors must tile into fairlets"
        tiles = fairlet_tiling(instance, leftover, fairlet)

        clustering = Clustering.of(groups + [list(t) for t in tiles.clusters])
        cost = clustering_cost(instance, clustering)
        if best is None or cost < best[0]:
            best = (cost, clustering)

    assert best is not None, "some optimum respects the cluster size bound"
    logging.debug(f"Vertex cover solver explored {branches} branches")

    return SolveResult(
        cost=best[0],
        clustering=best[1],
        solver="vc",
        parameters={"k": len(members), "c": fairlet.size, "kappa": fairlet.kappa},
    )
