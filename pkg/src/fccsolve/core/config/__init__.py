# SPDX-License-Identifier: GPL-3.0-or-later
# Copyright (C) 2025 South Patron LLC
# This file is part of fccsolve and licensed under the GPLv3+.
# See <https://www.gnu.org/licenses/> for details.

from .config import Config
from .loader import Loader
from .settings import SolverSettings

__all__ = [
    "Config",
    "Loader",
    "SolverSettings",
]
