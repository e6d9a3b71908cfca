# SPDX-License-Identifier: GPL-3.0-or-later
# Copyright (C) 2025 South Patron LLC
# This file is part of fccsolve and licensed under the GPLv3+.
# See <https://www.gnu.org/licenses/> for details.

from __future__ import annotations

import typing
import logging

from collections import Counter
from dataclasses import dataclass, field

from ...bip import Program, Relation, Solution
from ...core.instance import FairletVector
from ...core.clustering import Clustering
from .classes import ComponentClass


# The type of a component part is its color-count vector
PartType = typing.Tuple[int, ...]


@dataclass(frozen=True)
class Cut:
    """
    A partition of a class representative into connected parts, given by
    canonical positions.
    """

    parts: typing.Tuple[typing.Tuple[int, ...], ...]
    cost: int
    types: typing.Tuple[typing.Tuple[PartType, int], ...]

    def count(self, t: PartType) -> int:
        return dict(self.types).get(t, 0)


@dataclass(frozen=True)
class Shape:
    """
    How many parts of each type one cluster takes.
    """

    counts: typing.Tuple[typing.Tuple[PartType, int], ...]
    cost: int

    @property
    def size(self) -> int:
        return sum(sum(t) * k for t, k in self.counts)

    def count(self, t: PartType) -> int:
        return dict(self.counts).get(t, 0)


@dataclass
class ComponentProgram:
    program: Program
    fairlet: FairletVector
    classes: typing.List[ComponentClass]
    cuts: typing.List[typing.List[Cut]]
    shapes: typing.List[Shape]
    types: typing.List[PartType]
    comp_vars: typing.Dict[PartType, int] = field(default_factory=dict)
    cut_vars: typing.Dict[typing.Tuple[int, int], int] = field(
        default_factory=dict
    )
    shape_vars: typing.List[int] = field(default_factory=list)


def _part_type(
    cls: ComponentClass,
    part: typing.Iterable[int],
    kappa: int,
) -> PartType:
    counts = [0] * kappa
    for i in part:
        counts[cls.colors[i] - 1] += 1
    return tuple(counts)


# ----- Cuts -----------------------------------------------------------------


def enumerate_cuts(
    cls: ComponentClass,
    kappa: int,
    gamma: int,
    bound: typing.Optional[int] = None,
) -> typing.List[Cut]:
    """
    Partitions of the class representative into connected parts of at most
    gamma vertices, each costing its cross-part edges plus within-part
    non-edges. Cuts costing more than `bound` are skipped, and of the cuts
    with equal part types only the cheapest (first found) is kept.
    """
    size = cls.size
    masks = cls.neighbor_masks()
    full = (1 << size) - 1

    def connected(mask: int) -> bool:
        low = mask & -mask
        seen = low
        frontier = low
        while frontier:
            b = frontier & -frontier
            frontier ^= b
            grow = masks[b.bit_length() - 1] & mask & ~seen
            seen |= grow
            frontier |= grow
        return seen == mask

    def inside_non_edges(mask: int) -> int:
        k = mask.bit_count()
        edges = sum(
            (masks[i] & mask).bit_count() for i in range(size) if mask >> i & 1
        )
        return k * (k - 1) // 2 - edges // 2

    def leaving(mask: int, rest: int) -> int:
        return sum(
            (masks[i] & rest).bit_count() for i in range(size) if mask >> i & 1
        )

    best: typing.Dict[typing.Tuple[typing.Tuple[PartType, int], ...], Cut] = {}
    chosen: typing.List[int] = []

    def extend(free: int, cost: int) -> None:
        if bound is not None and cost > bound:
            return
        if not free:
            parts = tuple(
                tuple(i for i in range(size) if m >> i & 1) for m in chosen
            )
            types = tuple(
                sorted(Counter(_part_type(cls, p, kappa) for p in parts).items())
            )
            if types not in best or cost < best[types].cost:
                best[types] = Cut(parts=parts, cost=cost, types=types)
            return

        low = free & -free
        others = free ^ low
        sub = others
        while True:
            mask = sub | low
            if mask.bit_count() <= gamma and connected(mask):
                rest = free & ~mask
                chosen.append(mask)
                extend(rest, cost + inside_non_edges(mask) + leaving(mask, rest))
                chosen.pop()
            if sub == 0:
                break
            sub = (sub - 1) & others

    extend(full, 0)
    return list(best.values())


# ----- Shapes ---------------------------------------------------------------


def _pair_products(sizes: typing.List[int]) -> int:
    total = sum(sizes)
    return (total * total - sum(s * s for s in sizes)) // 2


def enumerate_shapes(
    types: typing.Sequence[PartType],
    supply: typing.Dict[PartType, int],
    fairlet: FairletVector,
    limit: int,
    bound: typing.Optional[int] = None,
) -> typing.List[Shape]:
    """
    Multisets of part types forming one fair cluster of at most `limit`
    vertices. A shape costs every vertex pair across two of its parts.
    """
    shapes: typing.List[Shape] = []
    picked: typing.List[typing.Tuple[PartType, int]] = []
    ordered = sorted(types)

    def extend(i: int, room: int, colors: typing.List[int]) -> None:
        if i == len(ordered):
            if fairlet.multiple_of(colors) is None:
                return
            sizes = [sum(t) for t, k in picked for _ in range(k)]
            cost = _pair_products(sizes)
            if bound is None or cost <= bound:
                shapes.append(Shape(counts=tuple(picked), cost=cost))
            return

        t = ordered[i]
        width = sum(t)
        top = min(supply.get(t, 0), room // width)
        for k in range(top + 1):
            if k:
                picked.append((t, k))
            extend(
                i + 1,
                room - k * width,
                [c + k * x for c, x in zip(colors, t)],
            )
            if k:
                picked.pop()

    extend(0, limit, [0] * fairlet.kappa)
    return shapes


# ----- Program --------------------------------------------------------------


def build_program(
    classes: typing.List[ComponentClass],
    fairlet: FairletVector,
    gamma: int,
    budget: typing.Optional[int] = None,
) -> ComponentProgram:
    """
    Variables count part types, chosen cuts per class and clusters per
    shape. Every component takes exactly one cut, the parts cut out equal
    the parts clusters take, and the total cost stays within the budget.
    """
    n = sum(c.size * c.multiplicity for c in classes)
    limit = min(gamma, n)

    cuts = [enumerate_cuts(c, fairlet.kappa, limit, budget) for c in classes]

    supply: typing.Dict[PartType, int] = {}
    for cls, options in zip(classes, cuts):
        most: typing.Dict[PartType, int] = {}
        for cut in options:
            for t, k in cut.types:
                most[t] = max(most.get(t, 0), k)
        for t, k in most.items():
            supply[t] = supply.get(t, 0) + k * cls.multiplicity

    types = sorted(supply)
    shapes = enumerate_shapes(types, supply, fairlet, limit, budget)

    model = ComponentProgram(
        program=Program(),
        fairlet=fairlet,
        classes=classes,
        cuts=cuts,
        shapes=shapes,
        types=types,
    )
    prog = model.program

    for t in types:
        model.comp_vars[t] = prog.add_variable(f"comp{t}", ub=supply[t])

    for ci, (cls, options) in enumerate(zip(classes, cuts)):
        for qi, cut in enumerate(options):
            model.cut_vars[(ci, qi)] = prog.add_variable(
                f"cut[{ci},{qi}]", ub=cls.multiplicity, cost=cut.cost
            )

    for si, shape in enumerate(shapes):
        ub = min(supply[t] // k for t, k in shape.counts)
        model.shape_vars.append(
            prog.add_variable(f"cluster[{si}]", ub=ub, cost=shape.cost)
        )

    for ci, (cls, options) in enumerate(zip(classes, cuts)):
        prog.add_constraint(
            {model.cut_vars[(ci, qi)]: 1 for qi in range(len(options))},
            Relation.EQ,
            cls.multiplicity,
            name=f"class[{ci}]",
        )

    for t in types:
        row = {model.comp_vars[t]: 1}
        for (ci, qi), j in model.cut_vars.items():
            if k := cuts[ci][qi].count(t):
                row[j] = -k
        prog.add_constraint(row, Relation.EQ, 0, name=f"cut{t}")

        row = {model.comp_vars[t]: 1}
        for si, shape in enumerate(shapes):
            if k := shape.count(t):
                row[model.shape_vars[si]] = -k
        prog.add_constraint(row, Relation.EQ, 0, name=f"take{t}")

    if budget is not None:
        prog.add_constraint(dict(prog.objective), Relation.LE, budget, "budget")

    logging.debug(
        f"Component program: {len(types)} part types, "
        f"{len(model.cut_vars)} cuts, {len(shapes)} shapes"
    )
    return model


def realize(model: ComponentProgram, solution: Solution) -> Clustering:
    """
    Hands the chosen cuts to the components of each class in order, pools
    the resulting parts by type and fills the chosen shapes from the pools.
    """
    values = solution.values
    pools: typing.Dict[PartType, typing.List[typing.Tuple[int, ...]]] = {
        t: [] for t in model.types
    }

    for ci, cls in enumerate(model.classes):
        members = iter(cls.members)
        for qi, cut in enumerate(model.cuts[ci]):
            for _ in range(values[model.cut_vars[(ci, qi)]]):
                member = next(members)
                for part in cut.parts:
                    t = _part_type(cls, part, model.fairlet.kappa)
                    pools[t].append(tuple(member[i] for i in part))

    groups: typing.List[typing.List[int]] = []
    for si, shape in enumerate(model.shapes):
        for _ in range(values[model.shape_vars[si]]):
            group: typing.List[int] = []
            for t, k in shape.counts:
                for _ in range(k):
                    group.extend(pools[t].pop())
            groups.append(group)

    assert all(not pool for pool in pools.values()), "every part is placed"
    return Clustering.of(groups)
