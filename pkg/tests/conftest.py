# SPDX-License-Identifier: GPL-3.0-or-later
# Copyright (C) 2025 South Patron LLC
# This file is part of fccsolve and licensed under the GPLv3+.
# See <https://www.gnu.org/licenses/> for details.

import typing

from importlib.resources import files

import pytest

from fccsolve.core.instance import ColoredInstance
from fccsolve.formats import parse_instance


def instance_path(name: str) -> str:
    return str(files("fccsolve.data") / "instances" / f"{name}.fcc")


def load(name: str) -> ColoredInstance:
    return parse_instance(instance_path(name))


# Shipped instances and their fair optimum
OPTIMA: typing.Dict[str, int] = {
    "fig1": 8,
    "fig1_mono": 4,
    "two_edges": 0,
    "path6": 2,
    "star6": 6,
}


@pytest.fixture
def fig1() -> ColoredInstance:
    return load("fig1")


@pytest.fixture
def fig1_mono() -> ColoredInstance:
    return load("fig1_mono")


@pytest.fixture
def path6() -> ColoredInstance:
    return load("path6")


@pytest.fixture
def two_edges() -> ColoredInstance:
    return load("two_edges")


@pytest.fixture
def star6() -> ColoredInstance:
    return load("star6")


@pytest.fixture(params=sorted(OPTIMA))
def shipped(request) -> typing.Tuple[ColoredInstance, int]:
    return load(request.param), OPTIMA[request.param]
