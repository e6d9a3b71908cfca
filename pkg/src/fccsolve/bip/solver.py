# SPDX-License-Identifier: GPL-3.0-or-later
# Copyright (C) 2025 South Patron LLC
# This file is part of fccsolve and licensed under the GPLv3+.
# See <https://www.gnu.org/licenses/> for details.

from __future__ import annotations

import typing
import logging

from collections import deque
from dataclasses import dataclass

from .program import Program, Relation


@dataclass(frozen=True)
class Solution:
    objective: int
    values: typing.Tuple[int, ...]


Bounds = typing.Tuple[typing.List[int], typing.List[int]]


class _Propagator:
    """
    Interval bound tightening over the constraint rows until a fixpoint.
    """

    def __init__(self, program: Program) -> None:
        self.rows: typing.List[typing.Tuple[typing.List[typing.Tuple[int, int]], int]] = []
        for row in program.constraints:
            terms = sorted(row.coefficients.items())
            match row.relation:
                case Relation.LE:
                    self.rows.append((terms, row.rhs))
                case Relation.GE:
                    self.rows.append(([(j, -c) for j, c in terms], -row.rhs))
                case Relation.EQ:
                    self.rows.append((terms, row.rhs))
                    self.rows.append(([(j, -c) for j, c in terms], -row.rhs))

        self.watch: typing.List[typing.List[int]] = [
            [] for _ in program.variables
        ]
        for r, (terms, _) in enumerate(self.rows):
            for j, _ in terms:
                self.watch[j].append(r)

    def run(
        self,
        lb: typing.List[int],
        ub: typing.List[int],
        changed: typing.Optional[typing.Iterable[int]] = None,
    ) -> bool:
        """
        Tightens lb/ub in place; False when some row cannot be satisfied.
        Every row is a "<=" row here.
        """
        if changed is None:
            queue = deque(range(len(self.rows)))
        else:
            queue = deque(sorted({r for j in changed for r in self.watch[j]}))
        queued = set(queue)

        while queue:
            r = queue.popleft()
            queued.discard(r)
            terms, rhs = self.rows[r]

            low = 0
            for j, c in terms:
                low += c * lb[j] if c > 0 else c * ub[j]
            slack = rhs - low
            if slack < 0:
                return False

            for j, c in terms:
                if c > 0:
                    cap = lb[j] + slack // c
                    if cap < ub[j]:
                        ub[j] = cap
                    else:
                        continue
                else:
                    floor = ub[j] - slack // (-c)
                    if floor > lb[j]:
                        lb[j] = floor
                    else:
                        continue
                if lb[j] > ub[j]:
                    return False
                for other in self.watch[j]:
                    if other != r and other not in queued:
                        queue.append(other)
                        queued.add(other)

        return True


class _Bounder:
    """
    Objective lower bound: each variable at its cheapest bound, plus for a
    family of disjoint unit-coefficient equality rows the cheapest way to
    fill what their lower bounds leave open.
    """

    def __init__(self, program: Program) -> None:
        self.objective = program.objective
        self.cover_rows: typing.List[typing.Tuple[typing.List[int], int]] = []

        used: typing.Set[int] = set()
        for row in program.constraints:
            if row.relation != Relation.EQ:
                continue
            if any(c != 1 for c in row.coefficients.values()):
                continue
            cols = sorted(row.coefficients)
            if used & set(cols):
                continue
            if any(self.objective.get(j, 0) < 0 for j in cols):
                continue
            used.update(cols)
            self.cover_rows.append((cols, row.rhs))

    def bound(self, lb: typing.List[int], ub: typing.List[int]) -> int:
        total = 0
        for j, c in self.objective.items():
            total += c * lb[j] if c > 0 else c * ub[j]

        for cols, rhs in self.cover_rows:
            missing = rhs - sum(lb[j] for j in cols)
            if missing <= 0:
                continue
            free = [self.objective.get(j, 0) for j in cols if ub[j] > lb[j]]
            if free:
                total += missing * min(free)

        return total


def solve(
    program: Program,
    upper_bound: typing.Optional[int] = None,
) -> typing.Optional[Solution]:
    """
    Depth-first branch and bound. Branches on the unfixed variable with
    the smallest domain (lowest index on ties), trying values ascending.
    With an upper bound, only solutions of objective at most that bound
    are returned.
    """
    nvars = len(program.variables)
    propagator = _Propagator(program)
    bounder = _Bounder(program)

    lb = [v.lb for v in program.variables]
    ub = [v.ub for v in program.variables]
    if not propagator.run(lb, ub):
        return None

    best_value = upper_bound + 1 if upper_bound is not None else None
    best: typing.Optional[Solution] = None
    nodes = 0

    stack: typing.List[typing.Tuple[typing.List[int], typing.List[int]]] = [
        (lb, ub)
    ]
    while stack:
        lb, ub = stack.pop()
        nodes += 1

        if best_value is not None and bounder.bound(lb, ub) >= best_value:
            continue

        branch = -1
        width = 0
        for j in range(nvars):
            w = ub[j] - lb[j]
            if w > 0 and (branch < 0 or w < width):
                branch, width = j, w
                if w == 1:
                    break

        if branch < 0:
            if not program.check(lb):
                continue
            value = program.evaluate(lb)
            if best_value is None or value < best_value:
                best_value = value
                best = Solution(objective=value, values=tuple(lb))
            continue

        children = []
        for x in range(lb[branch], ub[branch] + 1):
            clb, cub = list(lb), list(ub)
            clb[branch] = cub[branch] = x
            if propagator.run(clb, cub, [branch]):
                children.append((clb, cub))
        stack.extend(reversed(children))

    logging.debug(
        f"Integer program with {nvars} variables solved in {nodes} nodes"
    )
    return best
