# SPDX-License-Identifier: GPL-3.0-or-later
# Copyright (C) 2025 South Patron LLC
# This file is part of fccsolve and licensed under the GPLv3+.
# See <https://www.gnu.org/licenses/> for details.

from __future__ import annotations

import typing
import logging

from collections import Counter
from dataclasses import dataclass, field

import numpy as np

from scipy.optimize import linear_sum_assignment

from ..core import exceptions as fex


@dataclass(frozen=True)
class Spot:
    color: int
    owner: int


@dataclass(frozen=True)
class SpotGraph:
    """
    Spots on the left, colored vertices on the right. `weights` is keyed
    by (spot index, vertex); equal-colored pairs without an entry weigh 0.
    """

    left: typing.Tuple[Spot, ...]
    right: typing.Tuple[int, ...]
    right_colors: typing.Dict[int, int]
    weights: typing.Dict[typing.Tuple[int, int], int] = field(
        default_factory=dict
    )

    def __post_init__(self) -> None:
        for (s, v), w in self.weights.items():
            if not 0 <= s < len(self.left) or v not in self.right_colors:
                raise fex.ValidationException(
                    source=f"spot graph weight ({s}, {v}) has unknown ends"
                )
            if self.left[s].color != self.right_colors[v]:
                raise fex.ValidationException(
                    source=f"spot graph weight ({s}, {v}) joins different colors"
                )
            if w < 0:
                raise fex.ValidationException(
                    source=f"spot graph weight ({s}, {v}) is negative"
                )

    def weight(self, s: int, v: int) -> int:
        return self.weights.get((s, v), 0)


@dataclass(frozen=True)
class MatchingResult:
    total_weight: int
    assignment: typing.Dict[int, int]


def max_weight_saturating_matching(
    graph: SpotGraph,
) -> typing.Optional[MatchingResult]:
    """
    Maximum total weight over matchings that cover every spot; None when
    no such matching exists.

    Solved as a rectangular assignment with costs -weight * scale +
    column index, so weight dominates and ties go to lower vertices.
    Color-mismatched pairs are forbidden.
    """
    rows, cols = len(graph.left), len(graph.right)
    if rows == 0:
        return MatchingResult(total_weight=0, assignment={})

    need = Counter(s.color for s in graph.left)
    have = Counter(graph.right_colors[v] for v in graph.right)
    if rows > cols or any(need[c] > have[c] for c in need):
        return None

    right = sorted(graph.right)
    scale = rows * cols + 1

    cost = np.full((rows, cols), np.inf)
    for i, spot in enumerate(graph.left):
        for j, v in enumerate(right):
            if graph.right_colors[v] == spot.color:
                cost[i, j] = j - graph.weight(i, v) * scale

    try:
        row_ind, col_ind = linear_sum_assignment(cost)
    except ValueError:
        logging.debug("Spot assignment infeasible")
        return None

    if len(row_ind) != rows or not np.all(np.isfinite(cost[row_ind, col_ind])):
        return None

    assignment = {int(i): right[int(j)] for i, j in zip(row_ind, col_ind)}
    total = sum(graph.weight(i, v) for i, v in assignment.items())
    return MatchingResult(total_weight=total, assignment=assignment)
