# SPDX-License-Identifier: GPL-3.0-or-later
# Copyright (C) 2025 South Patron LLC
# This file is part of fccsolve and licensed under the GPLv3+.
# See <https://www.gnu.org/licenses/> for details.

from __future__ import annotations

import typing

from collections import defaultdict

from .records import (
    ColorVector,
    CurrentEntry,
    DPParams,
    DPRecord,
    DPTable,
    Draft,
    Group,
    OpenEntry,
    Witness,
)


def _bump(vec: ColorVector, i: int) -> ColorVector:
    out = list(vec)
    out[i] += 1
    return tuple(out)


def _plus(a: ColorVector, b: ColorVector) -> ColorVector:
    return tuple(x + y for x, y in zip(a, b))


def _fits(vec: ColorVector, cap: ColorVector) -> bool:
    return all(x <= c for x, c in zip(vec, cap))


# ----- Leaf and introduce ---------------------------------------------------


def leaf_table(vertex: int, params: DPParams) -> DPTable:
    """
    One record per allowed cluster size, with the vertex alone in the bag.
    """
    zero = (0,) * params.fairlet.kappa
    table = DPTable()
    for size in params.sizes:
        table.offer(
            DPRecord(
                open=(),
                current=(CurrentEntry(size, zero, (vertex,)),),
                cost=0,
                witness=Witness(past=((),)),
            )
        )
    return table


def process_introduce(
    table: DPTable,
    vertex: int,
    params: DPParams,
) -> DPTable:
    """
    Places the new bag vertex in a fresh cluster, in a cluster already
    meeting the bag, or in an open cluster which then meets the bag again.
    """
    out = DPTable()
    ci = params.color_index(vertex)
    zero = (0,) * params.fairlet.kappa

    for record in table:
        for size in params.sizes:
            draft = Draft.of(record)
            draft.currents.append((CurrentEntry(size, zero, (vertex,)), ()))
            out.offer(draft.freeze())

        for i, entry in enumerate(record.current):
            cap = params.capacity(entry.size)
            held = params.bag_counts(entry.bagset)[ci] + entry.colorvec[ci]
            if held >= cap[ci]:
                continue
            draft = Draft.of(record)
            _, past = draft.currents[i]
            bagset = tuple(sorted(entry.bagset + (vertex,)))
            draft.currents[i] = (
                CurrentEntry(entry.size, entry.colorvec, bagset),
                past,
            )
            out.offer(draft.freeze())

        for entry, _ in record.open:
            cap = params.capacity(entry.size)
            if entry.colorvec[ci] >= cap[ci]:
                continue
            draft = Draft.of(record)
            past = draft.take_open(entry)
            draft.currents.append(
                (CurrentEntry(entry.size, entry.colorvec, (vertex,)), past)
            )
            out.offer(draft.freeze())

    return out


# ----- Forget ---------------------------------------------------------------


def process_forget(
    table: DPTable,
    vertex: int,
    params: DPParams,
) -> DPTable:
    """
    Moves the vertex into the past of its cluster and charges every pair
    it will never meet again in a bag: non-neighbors sharing its cluster
    in the bag, neighbors elsewhere in the bag, and the cluster's slots
    still to be filled by vertices not yet introduced.
    """
    out = DPTable()
    ci = params.color_index(vertex)
    nbrs = params.instance.neighbors(vertex)

    for record in table:
        draft = Draft.of(record)
        at = next(
            i for i, (e, _) in enumerate(draft.currents) if vertex in e.bagset
        )
        entry, past = draft.currents.pop(at)

        rest = tuple(u for u in entry.bagset if u != vertex)
        others = [u for e, _ in draft.currents for u in e.bagset]
        future = entry.size - len(entry.bagset) - sum(entry.colorvec)

        draft.cost += (
            sum(1 for u in rest if u not in nbrs)
            + sum(1 for u in others if u in nbrs)
            + future
        )

        colorvec = _bump(entry.colorvec, ci)
        group = tuple(sorted(past + (vertex,)))

        if rest:
            draft.currents.append(
                (CurrentEntry(entry.size, colorvec, rest), group)
            )
        elif colorvec == params.capacity(entry.size):
            draft.closed.append(group)
        else:
            draft.opens.append((OpenEntry(entry.size, colorvec), group))

        out.offer(draft.freeze())

    return out


# ----- Join -----------------------------------------------------------------


OpenPlan = typing.Dict[typing.Tuple[OpenEntry, OpenEntry], int]


def _open_plans(
    left: typing.Sequence[typing.Tuple[OpenEntry, int]],
    right: typing.Sequence[typing.Tuple[OpenEntry, int]],
    params: DPParams,
) -> typing.Iterator[OpenPlan]:
    """
    Every way to pair open clusters of one side with open clusters of the
    other, up to swapping clusters with equal entries. Paired clusters
    share a size and fit its capacity together.
    """
    pairs = [
        (e, f)
        for e, _ in left
        for f, _ in right
        if e.size == f.size
        and _fits(_plus(e.colorvec, f.colorvec), params.capacity(e.size))
    ]
    spare_l = {e: m for e, m in left}
    spare_r = {f: m for f, m in right}
    plan: OpenPlan = {}

    def extend(i: int) -> typing.Iterator[OpenPlan]:
        if i == len(pairs):
            yield {k: v for k, v in plan.items() if v}
            return
        e, f = pairs[i]
        for k in range(min(spare_l[e], spare_r[f]) + 1):
            plan[(e, f)] = k
            spare_l[e] -= k
            spare_r[f] -= k
            yield from extend(i + 1)
            spare_l[e] += k
            spare_r[f] += k
        del plan[(e, f)]

    yield from extend(0)


def _merge_currents(
    rp: DPRecord,
    rq: DPRecord,
    params: DPParams,
) -> typing.Optional[
    typing.Tuple[typing.List[typing.Tuple[CurrentEntry, Group]], int]
]:
    """
    Adds up the pasts of matching current clusters; None when one would
    overflow. Also returns the pairs charged on both sides.
    """
    merged: typing.List[typing.Tuple[CurrentEntry, Group]] = []
    twice = 0
    for ep, gp, eq, gq in zip(
        rp.current, rp.witness.past, rq.current, rq.witness.past
    ):
        colorvec = _plus(ep.colorvec, eq.colorvec)
        filled = _plus(colorvec, params.bag_counts(ep.bagset))
        if not _fits(filled, params.capacity(ep.size)):
            return None
        twice += sum(ep.colorvec) * sum(eq.colorvec)
        merged.append(
            (
                CurrentEntry(ep.size, colorvec, ep.bagset),
                tuple(sorted(gp + gq)),
            )
        )
    return merged, twice


def _shape(record: DPRecord) -> typing.Tuple[typing.Tuple[int, Group], ...]:
    return tuple((e.size, e.bagset) for e in record.current)


def process_join(
    table_p: DPTable,
    table_q: DPTable,
    params: DPParams,
) -> DPTable:
    """
    Combines records of two subtrees over the same bag. Current clusters
    are matched by size and bag part; open clusters may pair up across
    the sides. Pairs of past vertices in one cluster but on different
    sides were charged by both sides and are refunded once.
    """
    out = DPTable()

    by_shape: typing.Dict[typing.Any, typing.List[DPRecord]] = defaultdict(
        list
    )
    for rq in table_q:
        by_shape[_shape(rq)].append(rq)

    for rp in table_p:
        for rq in by_shape.get(_shape(rp), ()):
            merged = _merge_currents(rp, rq, params)
            if merged is None:
                continue
            currents, twice = merged

            for plan in _open_plans(rp.open, rq.open, params):
                left = Draft.of(rp)
                right = Draft.of(rq)
                draft = Draft(
                    opens=[],
                    currents=list(currents),
                    closed=left.closed + right.closed,
                    cost=rp.cost + rq.cost - twice,
                )

                for (e, f), k in plan.items():
                    colorvec = _plus(e.colorvec, f.colorvec)
                    full = colorvec == params.capacity(e.size)
                    for _ in range(k):
                        group = tuple(
                            sorted(left.take_open(e) + right.take_open(f))
                        )
                        draft.cost -= sum(e.colorvec) * sum(f.colorvec)
                        if full:
                            draft.closed.append(group)
                        else:
                            draft.opens.append(
                                (OpenEntry(e.size, colorvec), group)
                            )

                draft.opens.extend(left.opens)
                draft.opens.extend(right.opens)
                out.offer(draft.freeze())

    return out
