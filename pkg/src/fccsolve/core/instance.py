# SPDX-License-Identifier: GPL-3.0-or-later
# Copyright (C) 2025 South Patron LLC
# This file is part of fccsolve and licensed under the GPLv3+.
# See <https://www.gnu.org/licenses/> for details.

from __future__ import annotations

import typing
import math
import functools

import networkx as nx

from pydantic import (
    BaseModel,
    PrivateAttr,
    ValidationError,
    field_validator,
    model_validator,
)

from . import exceptions as fex


ColorVector = typing.Tuple[int, ...]
Edge = typing.Tuple[int, int]


class FairletVector(BaseModel):
    """
    Per-color counts of the smallest fair multiset of colors.
    """

    counts: ColorVector

    class Config:
        extra = "forbid"
        frozen = True

    @field_validator("counts")
    @classmethod
    def _minimal(cls, counts: ColorVector) -> ColorVector:
        if not counts:
            raise ValueError("a fairlet needs at least one color")
        if any(c < 0 for c in counts):
            raise ValueError("fairlet counts must be nonnegative")
        nonzero = [c for c in counts if c > 0]
        if not nonzero:
            raise ValueError("a fairlet must contain at least one vertex")
        if functools.reduce(math.gcd, nonzero) != 1:
            raise ValueError(f"fairlet {counts} is not minimal")
        return counts

    @property
    def size(self) -> int:
        return sum(self.counts)

    @property
    def kappa(self) -> int:
        return len(self.counts)

    def scaled(self, d: int) -> ColorVector:
        return tuple(c * d for c in self.counts)

    def multiple_of(self, colorvec: typing.Sequence[int]) -> typing.Optional[int]:
        """
        Returns d >= 1 when colorvec equals d times the fairlet, else None.
        """
        total = sum(colorvec)
        if total == 0 or total % self.size:
            return None
        d = total // self.size
        if any(x != c * d for x, c in zip(colorvec, self.counts)):
            return None
        return d

    def min_multiplier(self, colorvec: typing.Sequence[int]) -> int:
        """
        Smallest d >= 1 with colorvec <= d times the fairlet, per color.
        """
        d = 1
        for x, c in zip(colorvec, self.counts):
            if x > 0:
                if c == 0:
                    raise ValueError(f"color count {x} cannot fit a zero slot")
                d = max(d, -(-x // c))
        return d


class ColoredInstance(BaseModel):
    """
    A simple undirected graph on vertices 1..n with a kappa-coloring.
    """

    n: int
    edges: typing.FrozenSet[Edge]
    chi: typing.Dict[int, int]
    kappa: int
    budget: typing.Optional[int] = None

    _adj: typing.List[typing.FrozenSet[int]] = PrivateAttr(default_factory=list)

    class Config:
        extra = "forbid"
        frozen = True

    @field_validator("edges", mode="before")
    @classmethod
    def _normalize_edges(cls, edges: typing.Any) -> typing.Any:
        if isinstance(edges, (set, frozenset)):
            edges = list(edges)
        if not isinstance(edges, (list, tuple)):
            return edges

        seen: typing.Set[Edge] = set()
        for e in edges:
            u, v = e
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise ValueError(f"duplicate edge {key}")
            seen.add(key)
        return frozenset(seen)

    @model_validator(mode="after")
    def _check(self) -> ColoredInstance:
        if self.n < 1:
            raise ValueError("an instance needs at least one vertex")
        if self.kappa < 1:
            raise ValueError("an instance needs at least one color")
        if self.budget is not None and self.budget < 0:
            raise ValueError("the budget must be nonnegative")

        for u, v in self.edges:
            if not (1 <= u <= self.n and 1 <= v <= self.n):
                raise ValueError(f"edge ({u}, {v}) leaves the vertex range")

        if set(self.chi) != set(range(1, self.n + 1)):
            raise ValueError("every vertex 1..n needs exactly one color")

        used = set(self.chi.values())
        if not used <= set(range(1, self.kappa + 1)):
            raise ValueError(f"colors must lie in 1..{self.kappa}")
        if len(used) != self.kappa:
            missing = sorted(set(range(1, self.kappa + 1)) - used)
            raise ValueError(f"colors {missing} are unused")

        return self

    def model_post_init(self, __context: typing.Any) -> None:
        # Runs before _check; out-of-range edges are left for it to report
        adj: typing.List[typing.Set[int]] = [
            set() for _ in range(max(self.n, 0) + 1)
        ]
        for u, v in self.edges:
            if not (1 <= u <= self.n and 1 <= v <= self.n):
                continue
            adj[u].add(v)
            adj[v].add(u)
        self._adj = [frozenset(a) for a in adj]

    # ----- Construction -----------------------------------------------------

    @classmethod
    def build(
        cls,
        n: int,
        edges: typing.Iterable[typing.Sequence[int]],
        chi: typing.Union[typing.Dict[int, int], typing.Sequence[int]],
        kappa: typing.Optional[int] = None,
        budget: typing.Optional[int] = None,
    ) -> ColoredInstance:
        """
        Builds an instance, accepting the coloring as a mapping or as a
        sequence listing the colors of vertices 1..n in order.
        """
        if not isinstance(chi, dict):
            chi = {v: c for v, c in enumerate(chi, start=1)}
        if kappa is None:
            kappa = max(chi.values(), default=0)

        try:
            return cls(
                n=n,
                edges=[tuple(e) for e in edges],
                chi=chi,
                kappa=kappa,
                budget=budget,
            )
        except ValidationError as ex:
            raise fex.InstanceValidationException(
                errors=ex.errors(),
                source="instance",
            ) from ex

    def recolored(
        self,
        chi: typing.Union[typing.Dict[int, int], typing.Sequence[int]],
    ) -> ColoredInstance:
        return ColoredInstance.build(self.n, self.edges, chi, budget=self.budget)

    def with_budget(self, budget: typing.Optional[int]) -> ColoredInstance:
        return ColoredInstance.build(
            self.n, self.edges, self.chi, self.kappa, budget
        )

    def with_edges(self, edges: typing.Iterable[Edge]) -> ColoredInstance:
        return ColoredInstance.build(
            self.n, edges, self.chi, self.kappa, self.budget
        )

    # ----- Queries ----------------------------------------------------------

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    def neighbors(self, v: int) -> typing.FrozenSet[int]:
        return self._adj[v]

    def adjacent(self, u: int, v: int) -> bool:
        return v in self._adj[u]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def color(self, v: int) -> int:
        return self.chi[v]

    def color_counts(
        self,
        vertices: typing.Optional[typing.Iterable[int]] = None,
    ) -> ColorVector:
        counts = [0] * self.kappa
        for v in self.vertices if vertices is None else vertices:
            counts[self.chi[v] - 1] += 1
        return tuple(counts)

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(self.vertices)
        g.add_edges_from(self.edges)
        return g


# ----- Operations -----------------------------------------------------------


def compute_fairlet(instance: ColoredInstance) -> FairletVector:
    """
    Divides the color counts by their gcd.
    """
    counts = instance.color_counts()
    g = functools.reduce(math.gcd, counts)
    return FairletVector(counts=tuple(c // g for c in counts))
