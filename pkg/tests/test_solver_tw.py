# SPDX-License-Identifier: GPL-3.0-or-later
# Copyright (C) 2025 South Patron LLC
# This file is part of fccsolve and licensed under the GPLv3+.
# See <https://www.gnu.org/licenses/> for details.

import pytest

from fccsolve.core import exceptions as fex
from fccsolve.core.config import SolverSettings
from fccsolve.core.instance import ColoredInstance, FairletVector, compute_fairlet
from fccsolve.core.clustering import clustering_cost, is_fair
from fccsolve.decomp import to_nice, tree_decomposition
from fccsolve.solvers.treewidth import (
    CurrentEntry,
    DPParams,
    DPTable,
    Draft,
    OpenEntry,
    leaf_table,
    process_forget,
    process_introduce,
    process_join,
    prune_table,
    size_guesses,
    solve_tw_fpt2,
    solve_tw_xp,
)


def test_size_guesses():
    assert size_guesses(FairletVector(counts=(2, 1)), 3, 9) == (3, 6, 9)
    assert size_guesses(FairletVector(counts=(1,)), 0, 5) == (1,)
    assert size_guesses(FairletVector(counts=(1, 1)), 1, 30) == tuple(
        range(2, 26, 2)
    )


def test_xp_shipped_optima(shipped):
    instance, optimum = shipped
    result = solve_tw_xp(instance)
    assert result.cost == optimum
    assert result.solver == "tw-xp"
    assert clustering_cost(instance, result.clustering) == optimum
    assert is_fair(result.clustering, compute_fairlet(instance), instance.chi)


def test_xp_reports_parameters(fig1):
    result = solve_tw_xp(fig1)
    assert result.parameters["tw"] == 3
    assert result.parameters["c"] == 3
    assert result.parameters["kappa"] == 2


def test_xp_with_given_decomposition(path6):
    graph = path6.to_networkx()
    nice = to_nice(tree_decomposition(graph, "heuristic"), graph)
    assert solve_tw_xp(path6, nice).cost == 2


def test_xp_heuristic_settings(star6):
    settings = SolverSettings(treewidth_mode="heuristic")
    assert solve_tw_xp(star6, settings=settings).cost == 6


@pytest.mark.parametrize("name", ["fig1_mono", "two_edges", "path6", "star6"])
def test_fpt2_matches_xp(name, request):
    instance = request.getfixturevalue(name)
    assert solve_tw_fpt2(instance).cost == solve_tw_xp(instance).cost


def test_fpt2_rejects_large_fairlets(fig1):
    with pytest.raises(fex.ParameterException):
        solve_tw_fpt2(fig1)


def test_leaf_then_forget_closes_singleton(fig1_mono):
    fairlet = compute_fairlet(fig1_mono)
    params = DPParams(
        instance=fig1_mono.with_edges([]),
        fairlet=fairlet,
        sizes=(1,),
        width=0,
    )
    table = leaf_table(1, params)
    assert isinstance(table, DPTable)
    assert len(table) >= 1

    done = process_forget(table, 1, params)
    costs = sorted(r.cost for r in done.records())
    assert costs[0] == 0
    assert all(not r.open and not r.current for r in done.records())


# ----- Transitions ----------------------------------------------------------


def _params(instance, sizes, fpt2=False):
    return DPParams(
        instance=instance,
        fairlet=compute_fairlet(instance),
        sizes=sizes,
        width=1,
        fpt2=fpt2,
    )


def _table(*drafts):
    table = DPTable()
    for draft in drafts:
        table.offer(draft.freeze())
    return table


def _draft(opens=(), currents=(), cost=0):
    return Draft(opens=list(opens), currents=list(currents), closed=[], cost=cost)


@pytest.fixture
def edge():
    # one edge between a color-1 and a color-2 vertex
    return ColoredInstance.build(2, [(1, 2)], [1, 2])


@pytest.fixture
def nine():
    # six vertices of color 1, three of color 2, fairlet (2,1)
    return ColoredInstance.build(9, [(1, 2)], [1, 1, 1, 1, 1, 1, 2, 2, 2])


def test_leaf_record_tracks_its_bag_vertex(edge):
    params = _params(edge, (2,))
    (record,) = leaf_table(1, params).records()
    assert record.cost == 0
    assert not record.open
    assert Draft.of(record).currents == [(CurrentEntry(2, (0, 0), (1,)), ())]


def test_leaf_introduce_forget_builds_the_pair(edge):
    params = _params(edge, (2,))

    introduced = process_introduce(leaf_table(1, params), 2, params)
    together = (CurrentEntry(2, (0, 0), (1, 2)),)
    apart = (CurrentEntry(2, (0, 0), (1,)), CurrentEntry(2, (0, 0), (2,)))
    assert {r.current for r in introduced} == {together, apart}
    assert introduced.get(((), apart)).witness.past == ((), ())

    first = process_forget(introduced, 1, params)
    joined = first.get(((), (CurrentEntry(2, (1, 0), (2,)),)))
    assert joined.cost == 0
    assert joined.witness.past == ((1,),)

    split = first.get(
        (((OpenEntry(2, (1, 0)), 1),), (CurrentEntry(2, (0, 0), (2,)),))
    )
    # the cut edge plus the open slot of vertex 1
    assert split.cost == 2
    assert split.witness.open_groups == ((OpenEntry(2, (1, 0)), (1,)),)

    second = process_forget(first, 2, params)
    done = second.get(((), ()))
    assert done.cost == 0
    assert done.witness.closed == ((1, 2),)

    # nothing is left to complete the open singletons
    assert prune_table(second, (0, 0), params).records() == [done]


def test_forget_charges_future_slots(nine):
    params = _params(nine, (3, 6, 9))
    table = _table(_draft(currents=[(CurrentEntry(6, (1, 0), (1, 2)), (3,))]))

    (record,) = process_forget(table, 1, params).records()
    assert record.cost == 3
    assert record.current == (CurrentEntry(6, (2, 0), (2,)),)
    assert record.witness.past == ((1, 3),)


def test_forget_closes_a_full_cluster(nine):
    params = _params(nine, (3, 6, 9))
    table = _table(_draft(currents=[(CurrentEntry(3, (1, 1), (5,)), (1, 7))]))

    (record,) = process_forget(table, 5, params).records()
    assert record.cost == 0
    assert not record.open and not record.current
    assert record.witness.closed == ((1, 5, 7),)


def test_forget_opens_an_unfinished_cluster(nine):
    params = _params(nine, (3, 6, 9))
    table = _table(_draft(currents=[(CurrentEntry(6, (0, 0), (4,)), ())]))

    (record,) = process_forget(table, 4, params).records()
    assert record.cost == 5
    assert record.open == ((OpenEntry(6, (1, 0)), 1),)
    assert record.witness.open_groups == ((OpenEntry(6, (1, 0)), (4,)),)


def test_introduce_reopens_an_open_cluster(nine):
    params = _params(nine, (3, 6, 9))
    table = _table(_draft(opens=[(OpenEntry(6, (2, 1)), (1, 2, 7))], cost=4))

    out = process_introduce(table, 3, params)
    # a fresh cluster per size, plus the reopened one
    assert len(out) == 4
    reopened = out.get(((), (CurrentEntry(6, (2, 1), (3,)),)))
    assert reopened.cost == 4
    assert reopened.witness.past == ((1, 2, 7),)


def test_introduce_respects_color_capacity(nine):
    params = _params(nine, (3, 6, 9))
    table = _table(_draft(currents=[(CurrentEntry(3, (0, 0), (1, 2)), ())]))

    blocked = process_introduce(table, 4, params)
    assert len(blocked) == 3
    assert all(
        4 not in e.bagset or len(e.bagset) == 1
        for r in blocked
        for e in r.current
    )

    allowed = process_introduce(table, 7, params)
    assert allowed.get(((), (CurrentEntry(3, (0, 0), (1, 2, 7)),))) is not None


def test_join_merges_open_pairs(nine):
    params = _params(nine, (3, 6, 9))
    left = _table(_draft(opens=[(OpenEntry(6, (1, 0)), (1,))], cost=5))
    right = _table(_draft(opens=[(OpenEntry(6, (1, 1)), (2, 7))], cost=4))

    out = process_join(left, right, params)
    assert len(out) == 2

    apart = out.get(
        (((OpenEntry(6, (1, 0)), 1), (OpenEntry(6, (1, 1)), 1)), ())
    )
    assert apart.cost == 9

    merged = out.get((((OpenEntry(6, (2, 1)), 1),), ()))
    # 1 * 2 cross pairs were charged on both sides
    assert merged.cost == 7
    assert merged.witness.open_groups == ((OpenEntry(6, (2, 1)), (1, 2, 7)),)


def test_join_refunds_shared_current_pairs(nine):
    params = _params(nine, (3, 6, 9))
    left = _table(_draft(currents=[(CurrentEntry(6, (1, 0), (3,)), (1,))], cost=2))
    right = _table(_draft(currents=[(CurrentEntry(6, (0, 1), (3,)), (7,))], cost=2))

    (record,) = process_join(left, right, params).records()
    assert record.cost == 3
    assert record.current == (CurrentEntry(6, (1, 1), (3,)),)
    assert record.witness.past == ((1, 7),)

    other = _table(_draft(currents=[(CurrentEntry(3, (0, 1), (3,)), (7,))]))
    assert len(process_join(left, other, params)) == 0


def test_prune_keeps_completable_records():
    pairs = ColoredInstance.build(4, [], [1, 2, 1, 2])
    small = _draft(opens=[(OpenEntry(2, (1, 0)), (1,))], cost=1)
    big = _draft(opens=[(OpenEntry(4, (1, 0)), (1,))], cost=3)

    xp = _params(pairs, (2, 4))
    assert len(prune_table(_table(small), (1, 2), xp)) == 1
    assert len(prune_table(_table(big), (1, 2), xp)) == 1
    assert len(prune_table(_table(small), (0, 0), xp)) == 0

    restricted = _params(pairs, (2, 4), fpt2=True)
    assert len(prune_table(_table(small), (1, 2), restricted)) == 1
    assert len(prune_table(_table(big), (1, 2), restricted)) == 0


def test_restricted_prune_drops_opens_for_singleton_fairlets():
    mono = ColoredInstance.build(3, [], [1, 1, 1])
    table = _table(_draft(opens=[(OpenEntry(2, (1,)), (1,))], cost=1))

    assert len(prune_table(table, (2,), _params(mono, (1, 2, 3)))) == 1
    assert len(prune_table(table, (2,), _params(mono, (1, 2, 3), True))) == 0
