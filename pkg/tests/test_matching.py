# SPDX-License-Identifier: GPL-3.0-or-later
# Copyright (C) 2025 South Patron LLC
# This file is part of fccsolve and licensed under the GPLv3+.
# See <https://www.gnu.org/licenses/> for details.

import random
import itertools

import pytest

from fccsolve.core import exceptions as fex
from fccsolve.matching import Spot, SpotGraph, max_weight_saturating_matching


def _graph(weights):
    return SpotGraph(
        left=(Spot(color=1, owner=0), Spot(color=1, owner=1)),
        right=(5, 6, 7),
        right_colors={5: 1, 6: 1, 7: 2},
        weights=weights,
    )


def test_heaviest_saturating_matching():
    rc = max_weight_saturating_matching(_graph({(0, 6): 2, (1, 5): 1}))
    assert rc is not None
    assert rc.total_weight == 3
    assert rc.assignment == {0: 6, 1: 5}


def test_ties_go_to_lower_vertices():
    rc = max_weight_saturating_matching(_graph({}))
    assert rc is not None
    assert rc.total_weight == 0
    assert sorted(rc.assignment.values()) == [5, 6]


def test_no_saturating_matching():
    graph = SpotGraph(
        left=(Spot(color=2, owner=0), Spot(color=2, owner=0)),
        right=(5, 6, 7),
        right_colors={5: 1, 6: 1, 7: 2},
    )
    assert max_weight_saturating_matching(graph) is None


def test_no_spots():
    graph = SpotGraph(left=(), right=(1,), right_colors={1: 1})
    rc = max_weight_saturating_matching(graph)
    assert rc is not None
    assert rc.assignment == {}


def test_weights_must_join_equal_colors():
    with pytest.raises(fex.ValidationException):
        _graph({(0, 7): 1})
    with pytest.raises(fex.ValidationException):
        _graph({(0, 5): -1})


# ----- Against exhaustive search --------------------------------------------


def _random_graph(seed):
    rng = random.Random(seed)
    right = tuple(range(10, 18))
    right_colors = {v: rng.choice([1, 2]) for v in right}
    left = tuple(
        Spot(color=rng.choice([1, 2]), owner=rng.randrange(3)) for _ in range(6)
    )
    weights = {
        (s, v): rng.randint(0, 4)
        for s, spot in enumerate(left)
        for v in right
        if right_colors[v] == spot.color and rng.random() < 0.6
    }
    return SpotGraph(
        left=left, right=right, right_colors=right_colors, weights=weights
    )


def _exhaustive(graph):
    best = None
    for image in itertools.permutations(graph.right, len(graph.left)):
        if any(
            graph.right_colors[v] != spot.color
            for spot, v in zip(graph.left, image)
        ):
            continue
        total = sum(graph.weights.get((s, v), 0) for s, v in enumerate(image))
        best = total if best is None else max(best, total)
    return best


@pytest.mark.parametrize("seed", range(25))
def test_matches_exhaustive_search(seed):
    graph = _random_graph(seed)
    expected = _exhaustive(graph)
    rc = max_weight_saturating_matching(graph)

    if expected is None:
        assert rc is None
        return

    assert rc is not None
    assert rc.total_weight == expected
    assert sorted(rc.assignment) == list(range(len(graph.left)))
    assert len(set(rc.assignment.values())) == len(graph.left)
    for s, v in rc.assignment.items():
        assert graph.right_colors[v] == graph.left[s].color
    assert sum(graph.weights.get(p, 0) for p in rc.assignment.items()) == expected
