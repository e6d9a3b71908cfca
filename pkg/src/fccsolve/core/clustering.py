# SPDX-License-Identifier: GPL-3.0-or-later
# Copyright (C) 2025 South Patron LLC
# This file is part of fccsolve and licensed under the GPLv3+.
# See <https://www.gnu.org/licenses/> for details.

from __future__ import annotations

import typing

from pydantic import BaseModel

from . import exceptions as fex
from .instance import ColoredInstance, FairletVector, compute_fairlet


Cost = int


class Clustering(BaseModel):
    """
    A list of vertex groups. Whether it partitions an instance's vertex set
    is checked against that instance, not at construction.
    """

    clusters: typing.Tuple[typing.Tuple[int, ...], ...]

    class Config:
        extra = "forbid"
        frozen = True

    @classmethod
    def of(cls, groups: typing.Iterable[typing.Iterable[int]]) -> Clustering:
        return cls(clusters=tuple(tuple(sorted(g)) for g in groups))

    def canonical(self) -> Clustering:
        """
        Sorts members within clusters and clusters by their smallest member.
        """
        groups = sorted(tuple(sorted(c)) for c in self.clusters)
        return Clustering(clusters=tuple(groups))

    def labels(self, n: int) -> typing.List[int]:
        """
        Maps each vertex to the index of its cluster; raises when the
        clusters do not partition 1..n.
        """
        label = [-1] * (n + 1)
        for idx, cluster in enumerate(self.clusters):
            if not cluster:
                raise fex.PartitionException(
                    reason=f"cluster #{idx} is empty",
                    source="clustering",
                )
            for v in cluster:
                if not 1 <= v <= n:
                    raise fex.PartitionException(
                        reason=f"vertex {v} is outside 1..{n}",
                        source="clustering",
                    )
                if label[v] != -1:
                    raise fex.PartitionException(
                        reason=f"vertex {v} appears in two clusters",
                        source="clustering",
                    )
                label[v] = idx

        missing = [v for v in range(1, n + 1) if label[v] == -1]
        if missing:
            raise fex.PartitionException(
                reason=f"vertices {missing} are not covered",
                source="clustering",
            )
        return label

    def is_partition_of(self, n: int) -> bool:
        try:
            self.labels(n)
            return True
        except fex.PartitionException:
            return False

    def __len__(self) -> int:
        return len(self.clusters)


# ----- Cost -----------------------------------------------------------------


def clustering_cost(instance: ColoredInstance, clustering: Clustering) -> Cost:
    """
    Counts edges between clusters plus non-adjacent pairs inside clusters.
    """
    label = clustering.labels(instance.n)

    cut = sum(1 for u, v in instance.edges if label[u] != label[v])

    missing = 0
    for cluster in clustering.clusters:
        members = list(cluster)
        for i, u in enumerate(members):
            for w in members[i + 1 :]:
                if not instance.adjacent(u, w):
                    missing += 1

    return cut + missing


def cost_from_pair_counts(
    instance: ColoredInstance,
    clustering: Clustering,
) -> Cost:
    """
    Evaluates |E| + a - 2b where a counts pairs sharing a cluster and b
    counts edges inside clusters.
    """
    label = clustering.labels(instance.n)

    a = sum(len(c) * (len(c) - 1) // 2 for c in clustering.clusters)
    b = sum(1 for u, v in instance.edges if label[u] == label[v])

    return instance.m + a - 2 * b


# ----- Fairness -------------------------------------------------------------


def is_fair(
    clustering: Clustering,
    fairlet: FairletVector,
    chi: typing.Mapping[int, int],
) -> bool:
    for cluster in clustering.clusters:
        counts = [0] * fairlet.kappa
        for v in cluster:
            counts[chi[v] - 1] += 1
        if fairlet.multiple_of(counts) is None:
            return False
    return True


def max_cluster_size_bound(width_upper_bound: int, fairlet_size: int) -> int:
    return max(24 * width_upper_bound, fairlet_size)


def fairlet_tiling(
    instance: ColoredInstance,
    vertices: typing.Optional[typing.Iterable[int]] = None,
    fairlet: typing.Optional[FairletVector] = None,
) -> Clustering:
    """
    Buckets the vertices by color and fills fairlet-sized clusters in
    ascending vertex order.
    """
    fairlet = fairlet or compute_fairlet(instance)
    chosen = sorted(instance.vertices if vertices is None else vertices)

    buckets: typing.List[typing.List[int]] = [[] for _ in range(fairlet.kappa)]
    for v in chosen:
        buckets[instance.color(v) - 1].append(v)

    if not chosen:
        return Clustering(clusters=())

    counts = [len(b) for b in buckets]
    d = fairlet.multiple_of(counts)
    if d is None:
        raise fex.ParameterException(
            parameter="vertices",
            reason=f"color counts {tuple(counts)} are not a multiple of the fairlet {fairlet.counts}",
        )

    groups = []
    for j in range(d):
        group: typing.List[int] = []
        for bucket, c in zip(buckets, fairlet.counts):
            group.extend(bucket[j * c : (j + 1) * c])
        groups.append(tuple(sorted(group)))

    return Clustering(clusters=tuple(groups))
