# SPDX-License-Identifier: GPL-3.0-or-later
# Copyright (C) 2025 South Patron LLC
# This file is part of fccsolve and licensed under the GPLv3+.
# See <https://www.gnu.org/licenses/> for details.

from __future__ import annotations

import typing

from ..core import exceptions as fex
from ..decomp.tree_decomposition import TreeDecomposition
from ..decomp.treedepth import TreedepthForest


def _numbers(
    fields: typing.List[str],
    line_no: int,
    source: str,
) -> typing.List[int]:
    try:
        return [int(f) for f in fields]
    except ValueError:
        raise fex.DecompositionParseException(
            message=f"not an integer in {' '.join(fields)}",
            line_no=line_no,
            source=source,
        )


# ----- Tree decompositions --------------------------------------------------


def parse_tree_decomposition(
    text: str,
    source: str = "<text>",
) -> TreeDecomposition:
    """
    Reads `s td <bags> <largest bag> <n>`, then `b <id> <vertices...>`
    lines and one `<id> <id>` line per tree edge.
    """
    header: typing.Optional[typing.Tuple[int, int, int]] = None
    td = TreeDecomposition()

    def fail(message: str, line_no: int) -> typing.NoReturn:
        raise fex.DecompositionParseException(
            message=message, line_no=line_no, source=source
        )

    for line_no, raw in enumerate(text.splitlines(), start=1):
        fields = raw.split()
        if not fields or fields[0] == "c":
            continue

        if header is None:
            if fields[:2] != ["s", "td"] or len(fields) != 5:
                fail("the first line must be 's td <bags> <width+1> <n>'", line_no)
            nb, size, n = _numbers(fields[2:], line_no, source)
            header = (nb, size, n)
            continue

        nb, size, n = header
        if fields[0] == "b":
            if len(fields) < 2:
                fail("a bag line needs an id", line_no)
            bid, *members = _numbers(fields[1:], line_no, source)
            if not 1 <= bid <= nb:
                fail(f"bag id {bid} outside 1..{nb}", line_no)
            if bid in td.bags:
                fail(f"bag {bid} listed twice", line_no)
            if any(not 1 <= v <= n for v in members):
                fail(f"bag {bid} names a vertex outside 1..{n}", line_no)
            if len(members) > size:
                fail(f"bag {bid} is larger than the declared {size}", line_no)
            td.bags[bid] = frozenset(members)
        else:
            if len(fields) != 2:
                fail("a tree edge line needs two bag ids", line_no)
            a, b = _numbers(fields, line_no, source)
            if not (1 <= a <= nb and 1 <= b <= nb):
                fail(f"tree edge ({a}, {b}) names an unknown bag", line_no)
            td.edges.append((a, b))

    last = len(text.splitlines())
    if header is None:
        fail("missing 's td' header", last)
    if len(td.bags) != header[0]:
        fail(f"header declares {header[0]} bags, found {len(td.bags)}", last)

    return td


def write_tree_decomposition(td: TreeDecomposition, n: int) -> str:
    ids = sorted(td.bags)
    renum = {b: i for i, b in enumerate(ids, start=1)}
    lines = [f"s td {len(ids)} {td.width + 1} {n}"]
    for b in ids:
        members = " ".join(str(v) for v in sorted(td.bags[b]))
        lines.append(f"b {renum[b]} {members}".rstrip())
    for a, b in td.edges:
        lines.append(f"{renum[a]} {renum[b]}")
    return "\n".join(lines) + "\n"


def load_tree_decomposition(path: str) -> TreeDecomposition:
    with open(path, "r", encoding="ascii") as fh:
        return parse_tree_decomposition(fh.read(), path)


# ----- Treedepth forests ----------------------------------------------------


def parse_forest(text: str, source: str = "<text>") -> TreedepthForest:
    """
    One `<vertex> <parent>` line per vertex, parent 0 for roots.
    """
    forest = TreedepthForest()

    for line_no, raw in enumerate(text.splitlines(), start=1):
        fields = raw.split()
        if not fields or fields[0] == "c":
            continue
        if len(fields) != 2:
            raise fex.DecompositionParseException(
                message="a forest line needs a vertex and its parent",
                line_no=line_no,
                source=source,
            )
        v, p = _numbers(fields, line_no, source)
        if v < 1 or p < 0 or v == p:
            raise fex.DecompositionParseException(
                message=f"bad forest line {v} {p}",
                line_no=line_no,
                source=source,
            )
        if v in forest.parent:
            raise fex.DecompositionParseException(
                message=f"vertex {v} listed twice",
                line_no=line_no,
                source=source,
            )
        forest.parent[v] = p or None

    return forest


def write_forest(forest: TreedepthForest) -> str:
    lines = [f"{v} {forest.parent[v] or 0}" for v in sorted(forest.parent)]
    return "\n".join(lines) + "\n"


def load_forest(path: str) -> TreedepthForest:
    with open(path, "r", encoding="ascii") as fh:
        return parse_forest(fh.read(), path)
