# SPDX-License-Identifier: GPL-3.0-or-later
# Copyright (C) 2025 South Patron LLC
# This file is part of fccsolve and licensed under the GPLv3+.
# See <https://www.gnu.org/licenses/> for details.

import networkx as nx
import pytest

from fccsolve.core import exceptions as fex
from fccsolve.core.clustering import clustering_cost
from fccsolve.formats import write_instance
from fccsolve.oracle import brute_force_optimum
from fccsolve.utils.generators import FAMILIES, generate, relabel


@pytest.mark.parametrize("family", FAMILIES)
def test_same_seed_same_instance(family):
    a = generate(family, 9, (2, 1), seed=11)
    b = generate(family, 9, (2, 1), seed=11)
    assert write_instance(a) == write_instance(b)
    assert a.color_counts() == (6, 3)


def test_seeds_differ():
    a = generate("gnp", 10, (1, 1), seed=1, p=0.5)
    b = generate("gnp", 10, (1, 1), seed=2, p=0.5)
    assert write_instance(a) != write_instance(b)


def test_tree_family_is_a_tree():
    instance = generate("tree", 12, (1, 1), seed=3)
    assert nx.is_tree(instance.to_networkx())


def test_ktree_width():
    instance = generate("ktree", 10, (1, 1), seed=5, k=3)
    # a 3-tree on 10 vertices: a 4-clique plus three edges per new vertex
    assert instance.m == 6 + 3 * 6


def test_star_forest_shape():
    instance = generate("star-forest", 8, (1, 1), seed=0, star_size=4)
    assert instance.m == 6
    assert sorted(instance.degree(v) for v in instance.vertices)[-2:] == [3, 3]


@pytest.mark.parametrize(
    "family, n, fairlet",
    [
        ("gnp", 7, (1, 1)),
        ("gnp", 0, (1,)),
        ("gnp", 4, (0, 1)),
        ("lattice", 4, (1, 1)),
    ],
)
def test_rejected_parameters(family, n, fairlet):
    with pytest.raises(fex.ParameterException):
        generate(family, n, fairlet, seed=0)


def test_relabel_preserves_the_optimum(star6):
    copy, mapping = relabel(star6, seed=4)
    assert sorted(mapping) == sorted(mapping.values()) == list(star6.vertices)
    assert copy.m == star6.m
    assert copy.color_counts() == star6.color_counts()
    for v in star6.vertices:
        assert copy.color(mapping[v]) == star6.color(v)

    cost, clustering = brute_force_optimum(copy)
    assert cost == brute_force_optimum(star6)[0]
    assert clustering_cost(copy, clustering) == cost
