# SPDX-License-Identifier: GPL-3.0-or-later
# Copyright (C) 2025 South Patron LLC
# This file is part of fccsolve and licensed under the GPLv3+.
# See <https://www.gnu.org/licenses/> for details.

import random
import itertools

import pytest

from pydantic import ValidationError

from fccsolve.core import exceptions as fex
from fccsolve.core.instance import ColoredInstance, FairletVector, compute_fairlet
from fccsolve.core.clustering import (
    Clustering,
    clustering_cost,
    cost_from_pair_counts,
    fairlet_tiling,
    is_fair,
    max_cluster_size_bound,
)
from fccsolve.core.result import SolveResult, decide


# ----- Instances ------------------------------------------------------------


def test_fairlet_of_fig1(fig1):
    fairlet = compute_fairlet(fig1)
    assert fairlet.counts == (2, 1)
    assert fairlet.size == 3
    assert fairlet.kappa == 2


def test_fairlet_must_be_minimal():
    with pytest.raises(ValidationError):
        FairletVector(counts=(2, 2))
    with pytest.raises(ValidationError):
        FairletVector(counts=(0, 0))


def test_fairlet_multiples():
    fairlet = FairletVector(counts=(2, 1))
    assert fairlet.multiple_of((4, 2)) == 2
    assert fairlet.multiple_of((2, 2)) is None
    assert fairlet.multiple_of((0, 0)) is None
    assert fairlet.min_multiplier((3, 0)) == 2
    assert fairlet.min_multiplier((0, 0)) == 1
    assert fairlet.scaled(3) == (6, 3)


def test_build_accepts_color_sequence():
    inst = ColoredInstance.build(3, [(2, 1), (2, 3)], [1, 2, 1])
    assert inst.kappa == 2
    assert inst.edges == frozenset({(1, 2), (2, 3)})
    assert inst.neighbors(2) == frozenset({1, 3})
    assert inst.color_counts() == (2, 1)


@pytest.mark.parametrize(
    "n, edges, chi",
    [
        (2, [(1, 1)], [1, 1]),
        (2, [(1, 2), (2, 1)], [1, 1]),
        (2, [(1, 3)], [1, 1]),
        (2, [], [1, 3]),
        (0, [], []),
    ],
)
def test_build_rejects_malformed(n, edges, chi):
    with pytest.raises(fex.InstanceValidationException):
        ColoredInstance.build(n, edges, chi)


@pytest.mark.parametrize("edge", [(1, 3), (0, 1), (4, 2)])
def test_out_of_range_edge_reports_the_range(edge):
    with pytest.raises(fex.InstanceValidationException) as info:
        ColoredInstance.build(2, [edge], [1, 1])
    assert "leaves the vertex range" in str(info.value)


def test_with_budget_and_edges(path6):
    inst = path6.with_budget(3)
    assert inst.budget == 3
    fewer = inst.with_edges([(1, 2)])
    assert fewer.m == 1
    assert fewer.budget == 3
    assert fewer.chi == path6.chi


# ----- Clusterings ----------------------------------------------------------


def test_cost_of_fig1_clusterings(fig1):
    singletons = Clustering.of([v] for v in fig1.vertices)
    assert clustering_cost(fig1, singletons) == fig1.m

    whole = Clustering.of([list(fig1.vertices)])
    assert clustering_cost(fig1, whole) == 36 - fig1.m

    tiling = fairlet_tiling(fig1)
    assert clustering_cost(fig1, tiling) == cost_from_pair_counts(fig1, tiling)


def test_fairlet_tiling_is_fair(fig1):
    tiling = fairlet_tiling(fig1)
    assert len(tiling) == 3
    assert tiling.is_partition_of(fig1.n)
    assert is_fair(tiling, compute_fairlet(fig1), fig1.chi)


def test_fairlet_tiling_rejects_uneven_subset(fig1):
    with pytest.raises(fex.ParameterException):
        fairlet_tiling(fig1, [1, 2])


def test_labels_rejects_non_partitions():
    with pytest.raises(fex.PartitionException):
        Clustering.of([[1, 2], [2, 3]]).labels(3)
    with pytest.raises(fex.PartitionException):
        Clustering.of([[1, 2]]).labels(3)
    with pytest.raises(fex.PartitionException):
        Clustering.of([[1, 4]]).labels(3)
    assert not Clustering(clusters=((1,), ())).is_partition_of(1)


def test_canonical_orders_clusters():
    clustering = Clustering(clusters=((5, 3), (2, 1, 4)))
    assert clustering.canonical().clusters == ((1, 2, 4), (3, 5))


def test_unfair_cluster_detected(path6):
    fairlet = compute_fairlet(path6)
    assert not is_fair(Clustering.of([[1, 3], [2, 4], [5, 6]]), fairlet, path6.chi)
    assert is_fair(Clustering.of([[1, 2], [3, 4], [5, 6]]), fairlet, path6.chi)


def test_max_cluster_size_bound():
    assert max_cluster_size_bound(2, 3) == 48
    assert max_cluster_size_bound(0, 3) == 3


def test_decide():
    result = SolveResult(
        cost=4,
        clustering=Clustering.of([[1]]),
        solver="oracle",
    )
    assert decide(result, 4)
    assert not decide(result, 3)


def test_fig1_reference_clusterings(fig1):
    fairlet = compute_fairlet(fig1)

    fair = Clustering.of([[1, 2, 3, 4, 5, 9], [6, 7, 8]])
    assert clustering_cost(fig1, fair) == 9
    assert cost_from_pair_counts(fig1, fair) == 9
    assert is_fair(fair, fairlet, fig1.chi)

    unfair = Clustering.of([[1, 2, 3, 4, 5], [6, 7, 8], [9]])
    assert clustering_cost(fig1, unfair) == 4
    assert not is_fair(unfair, fairlet, fig1.chi)

    best = Clustering.of([[1, 2, 5], [6, 7, 8], [3, 4, 9]])
    assert clustering_cost(fig1, best) == 8
    assert is_fair(best, fairlet, fig1.chi)


@pytest.mark.parametrize("seed", range(1000))
def test_pair_count_cost_matches_direct_count(seed):
    rng = random.Random(seed)
    n = rng.randint(1, 9)
    edges = [
        e for e in itertools.combinations(range(1, n + 1), 2) if rng.random() < 0.4
    ]
    instance = ColoredInstance.build(n, edges, [1] * n)
    labels = {v: rng.randrange(n) for v in instance.vertices}
    clustering = Clustering.of(
        [v for v in instance.vertices if labels[v] == k] for k in set(labels.values())
    )

    expected = sum(
        (labels[u] == labels[v]) != instance.adjacent(u, v)
        for u, v in itertools.combinations(instance.vertices, 2)
    )
    assert clustering_cost(instance, clustering) == expected
    assert cost_from_pair_counts(instance, clustering) == expected
