# SPDX-License-Identifier: GPL-3.0-or-later
# Copyright (C) 2025 South Patron LLC
# This file is part of fccsolve and licensed under the GPLv3+.
# See <https://www.gnu.org/licenses/> for details.

import typing


class FccException(Exception):
    """Base class for exceptions in this package."""

    pass


# --------- General Exceptions ----------------------------------------------


class ConfigurationException(FccException):
    pass


# --------- Parsing Exceptions ----------------------------------------------


class ParsingException(FccException):
    """Raised when a parsing error occurs."""

    def __init__(self, source: typing.Optional[str] = None, *args, **kwargs):
        super().__init__(*args, **kwargs)
        self.source = source

    def __str__(self):
        resp = f"""PARSING EXCEPTION

There was a problem parsing an input document.
The location of the error is:

LOCATION: {self.source}
"""
        return resp


class InstanceParseException(ParsingException):
    """Raised when an instance file cannot be parsed."""

    def __init__(
        self,
        message: str,
        line_no: typing.Optional[int] = None,
        *args,
        **kwargs,
    ):
        super().__init__(*args, **kwargs)
        self.message = message
        self.line_no = line_no

    def __str__(self):
        resp = f"Source: {self.source}\n"
        if self.line_no is not None:
            resp += f"Line#: {self.line_no}\n"
        resp += f"Message: {self.message}\n"
        return resp


class DecompositionParseException(InstanceParseException):
    """Raised when a decomposition file cannot be parsed."""

    pass


class ReportParseException(ParsingException):
    """Raised when a solution report cannot be read back."""

    def __init__(
        self,
        message: str,
        errors: typing.Optional[typing.List] = None,
        *args,
        **kwargs,
    ):
        super().__init__(*args, **kwargs)
        self.message = message
        self.errors = errors

    def __str__(self):
        resp = f"Source: {self.source}\nMessage: {self.message}\n"
        if self.errors:
            for m in self.errors:
                loc = m.get("loc", None)
                msg = m.get("msg", None)

                resp += f"\nLocation: {loc}"
                resp += f"\nReason: {msg}\n"

        return resp


# --------- Validation Exceptions --------------------------------------------


class ValidationException(FccException):
    """Raised when a structure violates its invariants."""

    def __init__(self, source: typing.Optional[str] = None, *args, **kwargs):
        super().__init__(*args, **kwargs)
        self.source = source

    def __str__(self) -> str:
        resp = f"""VALIDATION EXCEPTION

A structure failed validation.

The source was: {self.source}
"""
        return resp


class InstanceValidationException(ValidationException):
    """Raised when a colored instance is malformed."""

    def __init__(
        self,
        errors: typing.Optional[typing.List] = None,
        *args,
        **kwargs,
    ):
        super().__init__(*args, **kwargs)
        self.errors = errors or []

    def __str__(self) -> str:
        resp = "The instance is malformed.\n"
        for m in self.errors:
            loc = m.get("loc", None)
            msg = m.get("msg", None)

            resp += f"\nLocation: {loc}"
            resp += f"\nReason: {msg}\n"
        return resp


class PartitionException(ValidationException):
    """Raised when a clustering is not a partition of the vertex set."""

    def __init__(self, reason: str, *args, **kwargs):
        super().__init__(*args, **kwargs)
        self.reason = reason

    def __str__(self) -> str:
        return f"Invalid partition: {self.reason}\n"


class DecompositionValidationException(ValidationException):
    """Raised when a decomposition does not fit its graph."""

    def __init__(
        self,
        kind: str,
        violations: typing.List[str],
        *args,
        **kwargs,
    ):
        super().__init__(*args, **kwargs)
        self.kind = kind
        self.violations = violations

    def __str__(self) -> str:
        resp = f"Invalid {self.kind}:\n"
        for v in self.violations:
            resp += f"\n  - {v}"
        return resp + "\n"


# --------- Solver Exceptions ------------------------------------------------


class SolverException(FccException):
    """Raised when a solver cannot be applied to an input."""

    def __init__(self, solver: typing.Optional[str] = None, *args, **kwargs):
        super().__init__(*args, **kwargs)
        self.solver = solver

    def __str__(self) -> str:
        return f"SOLVER EXCEPTION\n\nSolver: {self.solver}\n"


class ParameterException(SolverException):
    """Raised when a parameter precondition does not hold."""

    def __init__(
        self,
        parameter: str,
        reason: str,
        hint: typing.Optional[str] = None,
        *args,
        **kwargs,
    ):
        super().__init__(*args, **kwargs)
        self.parameter = parameter
        self.reason = reason
        self.hint = hint

    def __str__(self) -> str:
        resp = f"Parameter: {self.parameter}\nReason: {self.reason}\n"
        if self.solver:
            resp = f"Solver: {self.solver}\n" + resp
        if self.hint:
            resp += f"Hint: {self.hint}\n"
        return resp


class SizeLimitException(SolverException):
    """Raised when an input exceeds a configured size cap."""

    def __init__(
        self,
        what: str,
        size: int,
        cap: int,
        hint: typing.Optional[str] = None,
        *args,
        **kwargs,
    ):
        super().__init__(*args, **kwargs)
        self.what = what
        self.size = size
        self.cap = cap
        self.hint = hint

    def __str__(self) -> str:
        resp = f"The {self.what} has size {self.size}, above the cap of {self.cap}.\n"
        if self.hint:
            resp += f"Hint: {self.hint}\n"
        return resp


class RegistryException(SolverException):
    """Raised when a solver name cannot be resolved."""

    def __init__(
        self,
        name: str,
        known: typing.Optional[typing.List[str]] = None,
        *args,
        **kwargs,
    ):
        super().__init__(*args, **kwargs)
        self.name = name
        self.known = known or []

    def __str__(self) -> str:
        resp = f"Unknown solver: {self.name}\n"
        if self.known:
            resp += f"Known solvers: {', '.join(self.known)}\n"
        return resp
