# SPDX-License-Identifier: GPL-3.0-or-later
# Copyright (C) 2025 South Patron LLC
# This file is part of fccsolve and licensed under the GPLv3+.
# See <https://www.gnu.org/licenses/> for details.

from .reduction import ReducedInstance, VertexType, reduce_by_types, vertex_types
from .classes import ComponentClass, canonical_form, component_classes
from .program import (
    ComponentProgram,
    Cut,
    Shape,
    build_program,
    enumerate_cuts,
    enumerate_shapes,
    realize,
)
from .solver import decide_td, default_gamma, solve_bounded_components, solve_td

__all__ = [
    "ReducedInstance",
    "VertexType",
    "reduce_by_types",
    "vertex_types",
    "ComponentClass",
    "canonical_form",
    "component_classes",
    "ComponentProgram",
    "Cut",
    "Shape",
    "build_program",
    "enumerate_cuts",
    "enumerate_shapes",
    "realize",
    "decide_td",
    "default_gamma",
    "solve_bounded_components",
    "solve_td",
]
