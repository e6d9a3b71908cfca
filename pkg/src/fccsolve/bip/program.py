# SPDX-License-Identifier: GPL-3.0-or-later
# Copyright (C) 2025 South Patron LLC
# This file is part of fccsolve and licensed under the GPLv3+.
# See <https://www.gnu.org/licenses/> for details.

from __future__ import annotations

import typing
import enum

from pydantic import BaseModel, Field, model_validator


class Relation(str, enum.Enum):
    EQ = "="
    LE = "<="
    GE = ">="


class Variable(BaseModel):
    name: str
    lb: int = 0
    ub: int

    class Config:
        extra = "forbid"

    @model_validator(mode="after")
    def _bounds(self) -> Variable:
        if self.lb < 0 or self.ub < self.lb:
            raise ValueError(f"variable {self.name} has bounds [{self.lb}, {self.ub}]")
        return self


class Constraint(BaseModel):
    """
    Sparse row: sum of coefficients[j] * x_j related to rhs.
    """

    coefficients: typing.Dict[int, int]
    relation: Relation
    rhs: int
    name: typing.Optional[str] = None

    class Config:
        extra = "forbid"

    def activity(self, values: typing.Sequence[int]) -> int:
        return sum(c * values[j] for j, c in self.coefficients.items())

    def holds(self, values: typing.Sequence[int]) -> bool:
        act = self.activity(values)
        match self.relation:
            case Relation.EQ:
                return act == self.rhs
            case Relation.LE:
                return act <= self.rhs
            case Relation.GE:
                return act >= self.rhs


class Program(BaseModel):
    """
    Minimize objective . x over bounded nonnegative integers subject to
    the constraints.
    """

    variables: typing.List[Variable] = Field(default_factory=list)
    constraints: typing.List[Constraint] = Field(default_factory=list)
    objective: typing.Dict[int, int] = Field(default_factory=dict)

    class Config:
        extra = "forbid"

    @model_validator(mode="after")
    def _indices(self) -> Program:
        n = len(self.variables)
        for row in self.constraints:
            if any(not 0 <= j < n for j in row.coefficients):
                raise ValueError(f"constraint {row.name} names unknown variables")
        if any(not 0 <= j < n for j in self.objective):
            raise ValueError("the objective names unknown variables")
        return self

    def add_variable(self, name: str, ub: int, cost: int = 0) -> int:
        self.variables.append(Variable(name=name, ub=ub))
        j = len(self.variables) - 1
        if cost:
            self.objective[j] = cost
        return j

    def add_constraint(
        self,
        coefficients: typing.Dict[int, int],
        relation: Relation,
        rhs: int,
        name: typing.Optional[str] = None,
    ) -> None:
        n = len(self.variables)
        if any(not 0 <= j < n for j in coefficients):
            raise ValueError(f"constraint {name} names unknown variables")
        self.constraints.append(
            Constraint(
                coefficients={j: c for j, c in coefficients.items() if c},
                relation=relation,
                rhs=rhs,
                name=name,
            )
        )

    def evaluate(self, values: typing.Sequence[int]) -> int:
        return sum(c * values[j] for j, c in self.objective.items())

    def check(self, values: typing.Sequence[int]) -> bool:
        if len(values) != len(self.variables):
            return False
        for var, x in zip(self.variables, values):
            if not var.lb <= x <= var.ub:
                return False
        return all(row.holds(values) for row in self.constraints)
