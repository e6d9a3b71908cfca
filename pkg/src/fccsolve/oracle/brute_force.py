# SPDX-License-Identifier: GPL-3.0-or-later
# Copyright (C) 2025 South Patron LLC
# This file is part of fccsolve and licensed under the GPLv3+.
# See <https://www.gnu.org/licenses/> for details.

from __future__ import annotations

import typing
import logging

import networkx as nx

from ..core import exceptions as fex
from ..core.instance import ColoredInstance, FairletVector, compute_fairlet
from ..core.clustering import (
    Clustering,
    Cost,
    clustering_cost,
    is_fair,
)


DEFAULT_CAP = 12


class _PartitionWalk:
    """
    Walks set partitions of 1..n as restricted-growth strings in
    lexicographic order, skipping prefixes that cannot end fair.

    The partial cost of a prefix never decreases as vertices are added,
    so prefixes whose cost reaches `limit` are skipped as well.
    """

    def __init__(
        self,
        instance: ColoredInstance,
        fairlet: FairletVector,
        max_cluster_size: typing.Optional[int] = None,
    ) -> None:
        self.instance = instance
        self.fairlet = fairlet
        self.kappa = fairlet.kappa
        self.max_size = max_cluster_size or instance.n
        self.limit: typing.Optional[int] = None

        self.remaining = list(instance.color_counts())
        self.blocks: typing.List[typing.List[int]] = []
        self.colors: typing.List[typing.List[int]] = []
        self.deficit = [0] * self.kappa
        self.label = [-1] * (instance.n + 1)

    def _block_deficit(self, colorvec: typing.List[int]) -> typing.List[int]:
        d = self.fairlet.min_multiplier(colorvec)
        return [c * d - x for c, x in zip(self.fairlet.counts, colorvec)]

    def _feasible(self) -> bool:
        return all(
            self.deficit[i] <= self.remaining[i] for i in range(self.kappa)
        )

    def _place_cost(self, v: int, b: int) -> int:
        """
        Cost added by putting v into block b: v's edges to earlier vertices
        outside b and v's non-edges to members of b.
        """
        inst = self.instance
        earlier_nbrs = [u for u in inst.neighbors(v) if u < v]
        cut = sum(1 for u in earlier_nbrs if self.label[u] != b)
        inside = len(self.blocks[b]) if b < len(self.blocks) else 0
        joined = sum(1 for u in earlier_nbrs if self.label[u] == b)
        return cut + inside - joined

    def walk(self) -> typing.Iterator[typing.Tuple[typing.List[int], int]]:
        """
        Yields (labels, cost) for every fair clustering, labels indexed by
        vertex with slot 0 unused.
        """
        yield from self._extend(1, 0)

    def _extend(
        self,
        v: int,
        cost: int,
    ) -> typing.Iterator[typing.Tuple[typing.List[int], int]]:
        if v > self.instance.n:
            if all(
                self.fairlet.multiple_of(c) is not None for c in self.colors
            ):
                yield list(self.label), cost
            return

        color = self.instance.color(v) - 1
        self.remaining[color] -= 1

        for b in range(len(self.blocks) + 1):
            added = self._place_cost(v, b)
            if self.limit is not None and cost + added >= self.limit:
                continue

            fresh = b == len(self.blocks)
            if fresh:
                self.blocks.append([])
                self.colors.append([0] * self.kappa)
            elif len(self.blocks[b]) >= self.max_size:
                continue

            old = self._block_deficit(self.colors[b]) if not fresh else None
            self.colors[b][color] += 1
            new = self._block_deficit(self.colors[b])

            ok = sum(new) + sum(self.colors[b]) <= self.max_size
            for i in range(self.kappa):
                self.deficit[i] += new[i] - (old[i] if old else 0)

            if ok and self._feasible():
                self.blocks[b].append(v)
                self.label[v] = b
                yield from self._extend(v + 1, cost + added)
                self.label[v] = -1
                self.blocks[b].pop()

            for i in range(self.kappa):
                self.deficit[i] -= new[i] - (old[i] if old else 0)
            self.colors[b][color] -= 1
            if fresh:
                self.blocks.pop()
                self.colors.pop()

        self.remaining[color] += 1


def _check_cap(instance: ColoredInstance, cap: int) -> None:
    if instance.n > cap:
        raise fex.SizeLimitException(
            what="instance for the oracle",
            size=instance.n,
            cap=cap,
            hint="raise --oracle-cap or use a parameterized solver",
            solver="oracle",
        )


def _to_clustering(labels: typing.List[int]) -> Clustering:
    groups: typing.Dict[int, typing.List[int]] = {}
    for v, b in enumerate(labels):
        if v > 0:
            groups.setdefault(b, []).append(v)
    return Clustering(clusters=tuple(tuple(groups[b]) for b in sorted(groups)))


# ----- Operations -----------------------------------------------------------


def enumerate_fair_clusterings(
    instance: ColoredInstance,
    max_cluster_size: typing.Optional[int] = None,
    cap: int = DEFAULT_CAP,
) -> typing.Iterator[Clustering]:
    _check_cap(instance, cap)
    walk = _PartitionWalk(instance, compute_fairlet(instance), max_cluster_size)
    for labels, _ in walk.walk():
        yield _to_clustering(labels)


def restricted_optimum(
    instance: ColoredInstance,
    max_cluster_size: typing.Optional[int] = None,
    cap: int = DEFAULT_CAP,
) -> typing.Optional[typing.Tuple[Cost, Clustering]]:
    """
    Minimum cost over fair clusterings whose clusters stay within
    max_cluster_size; None when there is no such clustering. Ties go to the
    lexicographically least restricted-growth string.
    """
    _check_cap(instance, cap)
    walk = _PartitionWalk(instance, compute_fairlet(instance), max_cluster_size)

    best: typing.Optional[typing.Tuple[Cost, typing.List[int]]] = None
    for labels, cost in walk.walk():
        if best is None or cost < best[0]:
            best = (cost, labels)
            walk.limit = cost

    if best is None:
        return None
    return best[0], _to_clustering(best[1])


def brute_force_optimum(
    instance: ColoredInstance,
    cap: int = DEFAULT_CAP,
) -> typing.Tuple[Cost, Clustering]:
    rc = restricted_optimum(instance, None, cap)
    assert rc is not None, "the single all-vertex cluster is always fair"
    logging.debug(f"Oracle optimum {rc[0]} on n={instance.n}")
    return rc


def _is_nice(instance: ColoredInstance, clustering: Clustering) -> bool:
    graph = instance.to_networkx()
    return all(
        len(c) <= 2 or nx.is_connected(graph.subgraph(c))
        for c in clustering.clusters
    )


def _require_pairs(instance: ColoredInstance, fairlet: FairletVector) -> None:
    if fairlet.size != 2:
        raise fex.ParameterException(
            parameter="fairlet size",
            reason=f"needs a fairlet of size 2, got {fairlet.counts}",
            hint="nice solutions are only defined for two balanced colors",
            solver="oracle",
        )


def find_nice_optimum(
    instance: ColoredInstance,
    cap: int = DEFAULT_CAP,
) -> typing.Optional[Clustering]:
    """
    The first optimal fair clustering, in restricted-growth order, whose
    clusters of size greater than two induce connected subgraphs.
    """
    fairlet = compute_fairlet(instance)
    _require_pairs(instance, fairlet)

    optimum, _ = brute_force_optimum(instance, cap)

    walk = _PartitionWalk(instance, fairlet)
    walk.limit = optimum + 1
    for labels, cost in walk.walk():
        if cost != optimum:
            continue
        clustering = _to_clustering(labels)
        if _is_nice(instance, clustering):
            return clustering

    return None


def make_nice(instance: ColoredInstance, clustering: Clustering) -> Clustering:
    """
    Splits disconnected clusters of size greater than two without raising
    the cost, until every such cluster induces a connected subgraph.

    A bichromatic component A of a bad cluster Z loses its surplus of the
    majority color and becomes a cluster of its own; the rest of Z stays
    together. When every component of Z is monochromatic, Z is split into
    color pairs.
    """
    fairlet = compute_fairlet(instance)
    _require_pairs(instance, fairlet)
    if not is_fair(clustering, fairlet, instance.chi):
        raise fex.ParameterException(
            parameter="clustering",
            reason="make_nice needs a fair clustering",
        )

    graph = instance.to_networkx()
    start = clustering_cost(instance, clustering)
    work = [sorted(c) for c in clustering.clusters]

    i = 0
    while i < len(work):
        z = work[i]
        if len(z) <= 2 or nx.is_connected(graph.subgraph(z)):
            i += 1
            continue

        comps = sorted(
            (sorted(c) for c in nx.connected_components(graph.subgraph(z))),
            key=lambda c: c[0],
        )
        mixed = [
            c for c in comps if len({instance.color(v) for v in c}) == 2
        ]

        if mixed:
            a = mixed[0]
            by_color: typing.Dict[int, typing.List[int]] = {1: [], 2: []}
            for v in a:
                by_color[instance.color(v)].append(v)
            major, minor = sorted(by_color, key=lambda c: -len(by_color[c]))
            surplus = len(by_color[major]) - len(by_color[minor])
            removed = set(by_color[major][len(by_color[major]) - surplus :])
            z1 = [v for v in a if v not in removed]
            z2 = [v for v in z if v not in set(z1)]
            work[i : i + 1] = [z1, z2]
        else:
            reds = [v for v in z if instance.color(v) == 1]
            blues = [v for v in z if instance.color(v) == 2]
            work[i : i + 1] = [sorted(p) for p in zip(reds, blues)]

    result = Clustering(clusters=tuple(tuple(c) for c in work))
    assert clustering_cost(instance, result) <= start
    return result


def verify_solution(
    instance: ColoredInstance,
    clustering: Clustering,
    budget: int,
) -> bool:
    if not clustering.is_partition_of(instance.n):
        return False
    if not is_fair(clustering, compute_fairlet(instance), instance.chi):
        return False
    return clustering_cost(instance, clustering) <= budget
