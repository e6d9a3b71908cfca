# SPDX-License-Identifier: GPL-3.0-or-later
# Copyright (C) 2025 South Patron LLC
# This file is part of fccsolve and licensed under the GPLv3+.
# See <https://www.gnu.org/licenses/> for details.

from __future__ import annotations

import typing
import logging

from ..core import exceptions as fex
from ..core.instance import ColoredInstance


def _ints(
    fields: typing.List[str],
    count: int,
    line_no: int,
    source: str,
) -> typing.List[int]:
    if len(fields) != count:
        raise fex.InstanceParseException(
            message=f"expected {count} numbers, found {len(fields)}",
            line_no=line_no,
            source=source,
        )
    try:
        return [int(f) for f in fields]
    except ValueError:
        raise fex.InstanceParseException(
            message=f"not an integer in {' '.join(fields)}",
            line_no=line_no,
            source=source,
        )


def parse_instance_text(text: str, source: str = "<text>") -> ColoredInstance:
    """
    Reads the `p fcc` format: one header, one `n <vertex> <color>` line
    per vertex, one `e <u> <v>` line per edge with u < v, and `c`
    comment lines anywhere.
    """
    header: typing.Optional[typing.Tuple[int, int, int]] = None
    chi: typing.Dict[int, int] = {}
    edges: typing.Set[typing.Tuple[int, int]] = set()

    def fail(message: str, line_no: int) -> typing.NoReturn:
        raise fex.InstanceParseException(
            message=message, line_no=line_no, source=source
        )

    for line_no, raw in enumerate(text.splitlines(), start=1):
        fields = raw.split()
        if not fields or fields[0] == "c":
            continue

        tag, rest = fields[0], fields[1:]

        if header is None:
            if tag != "p" or not rest or rest[0] != "fcc":
                fail("expected the 'p fcc <n> <m> <kappa>' header", line_no)
            n, m, kappa = _ints(rest[1:], 3, line_no, source)
            if n < 1 or m < 0 or kappa < 1:
                fail(f"bad header values n={n} m={m} kappa={kappa}", line_no)
            header = (n, m, kappa)
            continue

        n, m, kappa = header
        match tag:
            case "n":
                v, color = _ints(rest, 2, line_no, source)
                if not 1 <= v <= n:
                    fail(f"vertex {v} outside 1..{n}", line_no)
                if not 1 <= color <= kappa:
                    fail(f"color {color} outside 1..{kappa}", line_no)
                if v in chi:
                    fail(f"vertex {v} colored twice", line_no)
                chi[v] = color
            case "e":
                u, v = _ints(rest, 2, line_no, source)
                if u == v:
                    fail(f"self-loop at vertex {u}", line_no)
                if u > v:
                    fail(f"edge ({u}, {v}) must list the smaller end first", line_no)
                if not (1 <= u <= n and 1 <= v <= n):
                    fail(f"edge ({u}, {v}) leaves 1..{n}", line_no)
                if (u, v) in edges:
                    fail(f"duplicate edge ({u}, {v})", line_no)
                edges.add((u, v))
            case "p":
                fail("a second header line", line_no)
            case _:
                fail(f"unknown line type '{tag}'", line_no)

    last = len(text.splitlines())
    if header is None:
        fail("missing 'p fcc' header", last)

    n, m, kappa = header
    if len(chi) != n:
        missing = sorted(set(range(1, n + 1)) - set(chi))
        fail(f"vertices without a color: {missing}", last)
    if len(edges) != m:
        fail(f"header declares {m} edges, found {len(edges)}", last)
    unused = sorted(set(range(1, kappa + 1)) - set(chi.values()))
    if unused:
        fail(f"colors {unused} are declared but unused", last)

    logging.debug(f"Parsed {source}: n={n} m={m} kappa={kappa}")
    return ColoredInstance.build(n, edges, chi, kappa)


def parse_instance(path: str) -> ColoredInstance:
    try:
        with open(path, "r", encoding="ascii") as fh:
            text = fh.read()
    except UnicodeDecodeError as ex:
        raise fex.InstanceParseException(
            message=f"not ASCII: {ex}",
            source=path,
        ) from ex
    return parse_instance_text(text, path)


def write_instance(
    instance: ColoredInstance,
    comments: typing.Sequence[str] = (),
) -> str:
    """
    The canonical text: comments, header, vertices ascending, edges
    ascending, LF line endings.
    """
    lines = [f"c {c}" for c in comments]
    lines.append(f"p fcc {instance.n} {instance.m} {instance.kappa}")
    lines.extend(f"n {v} {instance.color(v)}" for v in instance.vertices)
    lines.extend(f"e {u} {v}" for u, v in sorted(instance.edges))
    return "\n".join(lines) + "\n"


def save_instance(
    instance: ColoredInstance,
    path: str,
    comments: typing.Sequence[str] = (),
) -> None:
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        fh.write(write_instance(instance, comments))
