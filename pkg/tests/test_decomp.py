# SPDX-License-Identifier: GPL-3.0-or-later
# Copyright (C) 2025 South Patron LLC
# This file is part of fccsolve and licensed under the GPLv3+.
# See <https://www.gnu.org/licenses/> for details.

import random
import itertools

import networkx as nx
import pytest

from fccsolve.core import exceptions as fex
from fccsolve.core.config import SolverSettings
from fccsolve.decomp import (
    NodeKind,
    TreeDecomposition,
    TreedepthForest,
    elimination_order_decomposition,
    graph_parameters,
    is_vertex_cover,
    min_vertex_cover,
    to_nice,
    tree_decomposition,
    treedepth_forest,
    validate_forest,
    validate_nice,
    validate_tree_decomposition,
)
from fccsolve.decomp.tree_decomposition import decomposition_violations


# ----- Vertex cover ---------------------------------------------------------


def test_vertex_cover_of_path(path6):
    graph = path6.to_networkx()
    cover = min_vertex_cover(graph)
    assert cover.k == 3
    assert is_vertex_cover(graph, cover.cover)


def test_vertex_cover_matches_networkx_on_small_graphs():
    for seed in range(5):
        graph = nx.gnp_random_graph(9, 0.4, seed=seed)
        cover = min_vertex_cover(graph)
        assert is_vertex_cover(graph, cover.cover)
        # complement of a maximum independent set
        best = max(
            len(c) for c in nx.find_cliques(nx.complement(graph))
        )
        assert cover.k == graph.number_of_nodes() - best


def _random_graph(seed, max_n=10):
    rng = random.Random(seed)
    graph = nx.gnp_random_graph(
        rng.randint(1, max_n), rng.choice([0.2, 0.35, 0.5, 0.7]), seed=seed
    )
    return nx.convert_node_labels_to_integers(graph, first_label=1)


@pytest.mark.parametrize("seed", range(60))
def test_vertex_cover_matches_exhaustive_search(seed):
    graph = _random_graph(seed)
    nodes = sorted(graph.nodes)
    smallest = next(
        k
        for k in range(len(nodes) + 1)
        if any(
            is_vertex_cover(graph, frozenset(c))
            for c in itertools.combinations(nodes, k)
        )
    )
    cover = min_vertex_cover(graph)
    assert is_vertex_cover(graph, cover.cover)
    assert cover.k == smallest


def test_vertex_cover_of_edgeless_graph():
    graph = nx.empty_graph([1, 2, 3])
    assert min_vertex_cover(graph).k == 0


# ----- Tree decompositions --------------------------------------------------


def test_exact_treewidth(fig1, path6):
    assert tree_decomposition(path6.to_networkx()).width == 1
    # vertices 1..5 hold a wheel, whose treewidth is 3
    assert tree_decomposition(fig1.to_networkx()).width == 3


def test_heuristic_decomposition_is_valid(fig1):
    graph = fig1.to_networkx()
    td = tree_decomposition(graph, "heuristic")
    validate_tree_decomposition(graph, td)
    assert td.width >= 3


def test_exact_mode_respects_cap(fig1):
    with pytest.raises(fex.SizeLimitException):
        tree_decomposition(fig1.to_networkx(), "exact", exact_cap=5)


def test_file_mode_validates_source(path6):
    graph = path6.to_networkx()
    broken = TreeDecomposition(bags={1: frozenset({1, 2, 3})}, edges=[])
    with pytest.raises(fex.DecompositionValidationException) as info:
        tree_decomposition(graph, "file", source=broken)
    assert any("vertex 4" in v for v in info.value.violations)

    with pytest.raises(fex.ParameterException):
        tree_decomposition(graph, "file")


def test_elimination_order_decomposition_of_cycle():
    graph = nx.cycle_graph([1, 2, 3, 4, 5])
    td = elimination_order_decomposition(graph, [1, 2, 3, 4, 5])
    validate_tree_decomposition(graph, td)
    assert td.width == 2


def test_nice_decomposition(fig1):
    graph = fig1.to_networkx()
    td = tree_decomposition(graph)
    nice = to_nice(td, graph)

    assert nice.width == td.width
    assert nice.nodes[nice.root].bag == frozenset()
    kinds = {n.kind for n in nice.nodes.values()}
    assert kinds <= set(NodeKind)
    assert nice.postorder()[-1].id == nice.root
    assert nice.subtree_vertices()[nice.root] == frozenset(fig1.vertices)


def test_nice_decomposition_of_disconnected_graph(two_edges):
    graph = two_edges.to_networkx()
    nice = to_nice(tree_decomposition(graph), graph)
    validate_nice(graph, nice)
    assert nice.subtree_vertices()[nice.root] == frozenset(two_edges.vertices)


# ----- Treedepth ------------------------------------------------------------


def test_exact_treedepth_of_path(path6):
    forest = treedepth_forest(path6.to_networkx())
    assert forest.height == 3


def test_heuristic_treedepth_is_valid(fig1):
    graph = fig1.to_networkx()
    forest = treedepth_forest(graph, "heuristic")
    validate_forest(graph, forest)
    assert forest.height >= treedepth_forest(graph).height


def test_forest_queries():
    forest = TreedepthForest(parent={1: None, 2: 1, 3: 2, 4: 1, 5: None})
    assert forest.roots() == [1, 5]
    assert forest.children()[1] == [2, 4]
    assert forest.depth()[3] == 3
    assert forest.height == 3
    assert forest.ancestors(3) == [2, 1]
    assert forest.subtree(1) == [1, 2, 3, 4]


def test_invalid_forests(path6):
    graph = path6.to_networkx()
    flat = TreedepthForest(parent={v: None for v in path6.vertices})
    with pytest.raises(fex.DecompositionValidationException):
        validate_forest(graph, flat)

    cycle = TreedepthForest(parent={1: 2, 2: 1, 3: 1, 4: 3, 5: 4, 6: 5})
    with pytest.raises(fex.DecompositionValidationException) as info:
        validate_forest(graph, cycle)
    assert any("cycle" in v for v in info.value.violations)


# ----- Parameters -----------------------------------------------------------


def test_graph_parameters(path6):
    params = graph_parameters(path6.to_networkx())
    assert params.vertex_cover_number == 3
    assert params.treewidth == 1
    assert params.treedepth == 3
    assert params.treewidth_exact and params.treedepth_exact


def test_graph_parameters_heuristic(fig1):
    settings = SolverSettings(treewidth_mode="heuristic", treedepth_mode="heuristic")
    params = graph_parameters(fig1.to_networkx(), settings)
    assert not params.treewidth_exact
    assert not params.treedepth_exact
    assert params.treewidth >= 3


# ----- Random graphs --------------------------------------------------------


@pytest.mark.slow
@pytest.mark.parametrize("chunk", range(10))
def test_exact_width_never_exceeds_heuristic(chunk):
    for seed in range(chunk * 50, (chunk + 1) * 50):
        graph = _random_graph(seed)
        exact = tree_decomposition(graph)
        heuristic = tree_decomposition(graph, "heuristic")

        assert exact.width <= heuristic.width
        for td in (exact, heuristic):
            assert decomposition_violations(graph, td.bags, td.tree()) == []


@pytest.mark.slow
@pytest.mark.parametrize("chunk", range(4))
def test_random_forests_are_valid(chunk):
    for seed in range(chunk * 50, (chunk + 1) * 50):
        graph = _random_graph(seed)
        exact = treedepth_forest(graph)
        heuristic = treedepth_forest(graph, "heuristic")

        validate_forest(graph, exact)
        validate_forest(graph, heuristic)
        assert exact.height <= heuristic.height
