# SPDX-License-Identifier: GPL-3.0-or-later
# Copyright (C) 2025 South Patron LLC
# This file is part of fccsolve and licensed under the GPLv3+.
# See <https://www.gnu.org/licenses/> for details.

from __future__ import annotations

import typing
import random
import logging

import networkx as nx

from ..core import exceptions as fex
from ..core.instance import ColoredInstance


Family = typing.Literal["gnp", "tree", "ktree", "star-forest"]
FAMILIES: typing.Tuple[str, ...] = ("gnp", "tree", "ktree", "star-forest")


def _ktree(n: int, k: int, partial: float, rng: random.Random) -> nx.Graph:
    """
    A random k-tree: a (k+1)-clique, then each new vertex joins a random
    k-clique already present. With partial < 1 every edge survives with
    that probability, which gives a partial k-tree.
    """
    g = nx.complete_graph(min(n, k + 1))
    cliques = (
        [tuple(c) for c in _k_subsets(list(g.nodes), k)] if n > k + 1 else []
    )
    for v in range(k + 1, n):
        base = cliques[rng.randrange(len(cliques))]
        g.add_node(v)
        g.add_edges_from((v, u) for u in base)
        for drop in range(k):
            cliques.append(tuple(sorted(base[:drop] + base[drop + 1 :] + (v,))))

    if partial < 1.0:
        for e in sorted(g.edges):
            if rng.random() >= partial:
                g.remove_edge(*e)
    return g


def _k_subsets(
    items: typing.List[int],
    k: int,
) -> typing.Iterator[typing.Tuple[int, ...]]:
    if k == 0:
        yield ()
        return
    for i in range(len(items) - k + 1):
        for rest in _k_subsets(items[i + 1 :], k - 1):
            yield (items[i],) + rest


def _star_forest(n: int, star_size: int) -> nx.Graph:
    g = nx.empty_graph(n)
    for center in range(0, n, star_size):
        for leaf in range(center + 1, min(center + star_size, n)):
            g.add_edge(center, leaf)
    return g


def generate(
    family: str,
    n: int,
    fairlet: typing.Sequence[int],
    seed: int,
    p: float = 0.3,
    k: int = 2,
    partial: float = 1.0,
    star_size: int = 4,
) -> ColoredInstance:
    """
    A reproducible colored graph: the graph and then the coloring are drawn
    from one generator seeded with `seed`. The colors are the fairlet
    scaled to n, shuffled over the vertices.
    """
    c = sum(fairlet)
    if not fairlet or any(x < 1 for x in fairlet):
        raise fex.ParameterException(
            parameter="fairlet",
            reason=f"fairlet {tuple(fairlet)} needs positive counts",
        )
    if n < 1 or n % c:
        raise fex.ParameterException(
            parameter="n",
            reason=f"n={n} is not a positive multiple of the fairlet size {c}",
            hint=f"pick n from {c}, {2 * c}, {3 * c}, ...",
        )

    rng = random.Random(seed)

    match family:
        case "gnp":
            g = nx.gnp_random_graph(n, p, seed=rng)
        case "tree":
            g = nx.random_labeled_tree(n, seed=rng) if n > 1 else nx.empty_graph(1)
        case "ktree":
            if k < 1:
                raise fex.ParameterException(
                    parameter="k", reason=f"k must be positive, got {k}"
                )
            g = _ktree(n, k, partial, rng)
        case "star-forest":
            if star_size < 1:
                raise fex.ParameterException(
                    parameter="star_size",
                    reason=f"star size must be positive, got {star_size}",
                )
            g = _star_forest(n, star_size)
        case _:
            raise fex.ParameterException(
                parameter="family",
                reason=f"unknown family {family}",
                hint=f"choose one of {', '.join(FAMILIES)}",
            )

    colors = [
        color
        for color, count in enumerate(fairlet, start=1)
        for _ in range(count * (n // c))
    ]
    rng.shuffle(colors)

    edges = sorted((min(u, v) + 1, max(u, v) + 1) for u, v in g.edges)
    logging.debug(
        f"Generated {family} instance n={n} m={len(edges)} seed={seed}"
    )
    return ColoredInstance.build(n, edges, colors, len(fairlet))


def relabel(
    instance: ColoredInstance,
    seed: int,
) -> typing.Tuple[ColoredInstance, typing.Dict[int, int]]:
    """
    A copy under a seeded random vertex permutation, with the map from
    old labels to new ones.
    """
    order = list(instance.vertices)
    random.Random(seed).shuffle(order)
    mapping = {old: new for new, old in enumerate(order, start=1)}

    edges = [
        (min(mapping[u], mapping[v]), max(mapping[u], mapping[v]))
        for u, v in instance.edges
    ]
    chi = {mapping[v]: instance.color(v) for v in instance.vertices}
    copy = ColoredInstance.build(
        instance.n, edges, chi, instance.kappa, instance.budget
    )
    return copy, mapping
