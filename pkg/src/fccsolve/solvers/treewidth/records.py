# SPDX-License-Identifier: GPL-3.0-or-later
# Copyright (C) 2025 South Patron LLC
# This file is part of fccsolve and licensed under the GPLv3+.
# See <https://www.gnu.org/licenses/> for details.

from __future__ import annotations

import typing

from dataclasses import dataclass, field

from ...core.instance import ColoredInstance, FairletVector


ColorVector = typing.Tuple[int, ...]
Group = typing.Tuple[int, ...]


@dataclass(frozen=True, order=True, slots=True)
class OpenEntry:
    """
    A cluster with past vertices only: its final size and the color
    counts of those past vertices.
    """

    size: int
    colorvec: ColorVector


@dataclass(frozen=True, order=True, slots=True)
class CurrentEntry:
    """
    A cluster meeting the bag in `bagset`; `colorvec` counts its past
    vertices only.
    """

    size: int
    colorvec: ColorVector
    bagset: Group


OpenKey = typing.Tuple[typing.Tuple[OpenEntry, int], ...]
CurrentKey = typing.Tuple[CurrentEntry, ...]
RecordKey = typing.Tuple[OpenKey, CurrentKey]


@dataclass(frozen=True, slots=True)
class Witness:
    """
    The partial clustering behind a record: finished clusters, the past
    vertices of each open cluster and of each current cluster.
    """

    closed: typing.Tuple[Group, ...] = ()
    open_groups: typing.Tuple[typing.Tuple[OpenEntry, Group], ...] = ()
    past: typing.Tuple[Group, ...] = ()


@dataclass(frozen=True, slots=True)
class DPRecord:
    open: OpenKey
    current: CurrentKey
    cost: int
    witness: Witness

    @property
    def key(self) -> RecordKey:
        return (self.open, self.current)


@dataclass
class Draft:
    """
    Mutable working copy of a record used while applying a transition.
    """

    opens: typing.List[typing.Tuple[OpenEntry, Group]]
    currents: typing.List[typing.Tuple[CurrentEntry, Group]]
    closed: typing.List[Group]
    cost: int

    @classmethod
    def of(cls, record: DPRecord) -> Draft:
        return cls(
            opens=list(record.witness.open_groups),
            currents=list(zip(record.current, record.witness.past)),
            closed=list(record.witness.closed),
            cost=record.cost,
        )

    @classmethod
    def empty(cls) -> Draft:
        return cls(opens=[], currents=[], closed=[], cost=0)

    def take_open(self, entry: OpenEntry) -> Group:
        """
        Removes one open cluster with this entry and returns its group.
        """
        for i, (e, g) in enumerate(self.opens):
            if e == entry:
                del self.opens[i]
                return g
        raise KeyError(entry)

    def freeze(self) -> DPRecord:
        opens = sorted(self.opens)
        counts: typing.Dict[OpenEntry, int] = {}
        for e, _ in opens:
            counts[e] = counts.get(e, 0) + 1

        currents = sorted(self.currents, key=lambda item: item[0].bagset)

        return DPRecord(
            open=tuple(counts.items()),
            current=tuple(e for e, _ in currents),
            cost=self.cost,
            witness=Witness(
                closed=tuple(self.closed),
                open_groups=tuple(opens),
                past=tuple(g for _, g in currents),
            ),
        )


class DPTable:
    """
    At most one record per (open, current) key: the cheapest, and the
    first offered among equally cheap ones.
    """

    def __init__(self) -> None:
        self._records: typing.Dict[RecordKey, DPRecord] = {}

    def offer(self, record: DPRecord) -> None:
        existing = self._records.get(record.key)
        if existing is None or record.cost < existing.cost:
            self._records[record.key] = record

    def records(self) -> typing.List[DPRecord]:
        return list(self._records.values())

    def get(self, key: RecordKey) -> typing.Optional[DPRecord]:
        return self._records.get(key)

    def __len__(self) -> int:
        return len(self._records)

    def __iter__(self) -> typing.Iterator[DPRecord]:
        return iter(self._records.values())


@dataclass
class DPParams:
    """
    What every transition needs to know about the instance.
    """

    instance: ColoredInstance
    fairlet: FairletVector
    sizes: typing.Tuple[int, ...]
    width: int
    fpt2: bool = False
    future: typing.Dict[int, ColorVector] = field(default_factory=dict)

    def capacity(self, size: int) -> ColorVector:
        return self.fairlet.scaled(size // self.fairlet.size)

    def color_index(self, v: int) -> int:
        return self.instance.color(v) - 1

    def bag_counts(self, bagset: typing.Iterable[int]) -> ColorVector:
        return self.instance.color_counts(bagset)
