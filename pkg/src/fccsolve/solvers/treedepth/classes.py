# SPDX-License-Identifier: GPL-3.0-or-later
# Copyright (C) 2025 South Patron LLC
# This file is part of fccsolve and licensed under the GPLv3+.
# See <https://www.gnu.org/licenses/> for details.

from __future__ import annotations

import typing
import logging

from dataclasses import dataclass, field

import networkx as nx

from ...core import exceptions as fex
from ...core.instance import ColoredInstance


CanonicalCode = typing.Tuple[typing.Tuple[int, ...], typing.Tuple[int, ...]]
Cells = typing.List[typing.List[int]]


@dataclass
class ComponentClass:
    """
    Pairwise isomorphic components, each listed in its canonical order so
    that position i of one member corresponds to position i of every
    other.
    """

    code: CanonicalCode
    members: typing.List[typing.Tuple[int, ...]] = field(default_factory=list)

    @property
    def colors(self) -> typing.Tuple[int, ...]:
        return self.code[0]

    @property
    def size(self) -> int:
        return len(self.code[0])

    @property
    def multiplicity(self) -> int:
        return len(self.members)

    def adjacent(self, i: int, j: int) -> bool:
        if i == j:
            return False
        i, j = min(i, j), max(i, j)
        # Upper triangle, row by row
        k = i * self.size - i * (i + 1) // 2 + (j - i - 1)
        return self.code[1][k] == 1

    def neighbor_masks(self) -> typing.List[int]:
        masks = [0] * self.size
        for i in range(self.size):
            for j in range(self.size):
                if self.adjacent(i, j):
                    masks[i] |= 1 << j
        return masks


class _Canonizer:
    """
    Minimum (colors, adjacency bits) encoding over the orderings reached
    by individualization and refinement from the color partition.
    """

    def __init__(self, instance: ColoredInstance, vertices: typing.List[int]):
        self.instance = instance
        self.vertices = vertices
        self.nbrs = {
            v: instance.neighbors(v) & set(vertices) for v in vertices
        }
        self.best: typing.Optional[
            typing.Tuple[CanonicalCode, typing.Tuple[int, ...]]
        ] = None

    def refine(self, cells: Cells) -> Cells:
        """
        Splits cells by neighbor counts into every cell until stable; the
        split pieces keep a structural order.
        """
        while True:
            where = {v: i for i, cell in enumerate(cells) for v in cell}
            out: Cells = []
            for cell in cells:
                if len(cell) == 1:
                    out.append(cell)
                    continue
                sig: typing.Dict[typing.Tuple[int, ...], typing.List[int]] = {}
                for v in cell:
                    counts = [0] * len(cells)
                    for u in self.nbrs[v]:
                        counts[where[u]] += 1
                    sig.setdefault(tuple(counts), []).append(v)
                out.extend(sig[k] for k in sorted(sig))
            if len(out) == len(cells):
                return out
            cells = out

    def _twins(self, u: int, w: int) -> bool:
        return self.nbrs[u] - {w} == self.nbrs[w] - {u}

    def encode(self, order: typing.Sequence[int]) -> CanonicalCode:
        colors = tuple(self.instance.color(v) for v in order)
        bits = tuple(
            1 if order[j] in self.nbrs[order[i]] else 0
            for i in range(len(order))
            for j in range(i + 1, len(order))
        )
        return colors, bits

    def search(self, cells: Cells) -> None:
        cells = self.refine(cells)
        at = next((i for i, c in enumerate(cells) if len(c) > 1), None)

        if at is None:
            order = tuple(c[0] for c in cells)
            code = self.encode(order)
            if self.best is None or code < self.best[0]:
                self.best = (code, order)
            return

        tried: typing.List[int] = []
        for v in sorted(cells[at]):
            # Swapping twins is an automorphism fixing everything placed
            if any(self._twins(v, t) for t in tried):
                continue
            tried.append(v)
            rest = [u for u in cells[at] if u != v]
            self.search(cells[:at] + [[v], rest] + cells[at + 1 :])

    def run(self) -> typing.Tuple[CanonicalCode, typing.Tuple[int, ...]]:
        by_color: typing.Dict[int, typing.List[int]] = {}
        for v in sorted(self.vertices):
            by_color.setdefault(self.instance.color(v), []).append(v)
        self.search([by_color[c] for c in sorted(by_color)])
        assert self.best is not None
        return self.best


def canonical_form(
    instance: ColoredInstance,
    vertices: typing.Iterable[int],
) -> typing.Tuple[CanonicalCode, typing.Tuple[int, ...]]:
    """
    The canonical code of the induced colored subgraph and the vertex
    order realizing it.
    """
    return _Canonizer(instance, sorted(vertices)).run()


def component_classes(
    instance: ColoredInstance,
    cap: int = 12,
) -> typing.List[ComponentClass]:
    """
    Groups the connected components by colored isomorphism, classes in
    order of their first member's smallest vertex.
    """
    classes: typing.Dict[CanonicalCode, ComponentClass] = {}

    graph = instance.to_networkx()
    for comp in sorted(nx.connected_components(graph), key=min):
        if len(comp) > cap:
            raise fex.SizeLimitException(
                what="connected component",
                size=len(comp),
                cap=cap,
                hint="lower gamma or raise the component cap",
                solver="td",
            )
        code, order = canonical_form(instance, comp)
        classes.setdefault(code, ComponentClass(code=code)).members.append(
            order
        )

    logging.debug(
        f"{len(classes)} component classes over "
        f"{sum(c.multiplicity for c in classes.values())} components"
    )
    return list(classes.values())
