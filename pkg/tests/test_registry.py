# SPDX-License-Identifier: GPL-3.0-or-later
# Copyright (C) 2025 South Patron LLC
# This file is part of fccsolve and licensed under the GPLv3+.
# See <https://www.gnu.org/licenses/> for details.

import pytest

from fccsolve.core import exceptions as fex
from fccsolve.core.config import SolverSettings
from fccsolve.solvers import SolveContext, SolverRegistry


def test_catalog_is_loaded():
    assert {"oracle", "vc", "tw-xp", "tw-fpt2", "td"} <= set(
        SolverRegistry.names()
    )
    assert SolverRegistry.get("td").description


def test_unknown_solver():
    with pytest.raises(fex.RegistryException) as info:
        SolverRegistry.get("simplex")
    assert "oracle" in info.value.known


def test_cannot_instantiate():
    with pytest.raises(RuntimeError):
        SolverRegistry()


@pytest.mark.parametrize("name", ["oracle", "vc", "tw-xp", "tw-fpt2", "td"])
def test_every_solver_through_the_registry(name, path6):
    result = SolverRegistry.solve(name, path6)
    assert result.cost == 2
    assert result.solver == name


def test_context_settings_reach_the_solver(path6):
    context = SolveContext(settings=SolverSettings(oracle_cap=4))
    with pytest.raises(fex.SizeLimitException):
        SolverRegistry.solve("oracle", path6, context)


def test_context_gamma_reaches_the_solver(two_edges):
    result = SolverRegistry.solve("td", two_edges, SolveContext(gamma=2))
    assert result.parameters["gamma"] == 2
    assert result.cost == 0
