"""
Schemas for fixture documents: schemes, pairs, resolution data and symbol tables.
"""

from fractions import Fraction
from typing import Literal

from pydantic import BaseModel, Field, field_validator, model_validator

SCHEMA_VERSION = 1


def _rational(value: str | int) -> str:
    try:
        Fraction(str(value))
    except (ValueError, ZeroDivisionError) as e:
        raise ValueError(f"{value!r} is not a rational number") from e
    return str(value)


def default_variables(ambient_dim: int) -> list[str]:
    if ambient_dim <= 3:
        return ["x", "y", "z"][:ambient_dim]
    return [f"x{i}" for i in range(1, ambient_dim + 1)]


class SymbolSpec(BaseModel):
    dim: int
    count_poly: list[int] | None = None


class TermSpec(BaseModel):
    coeff: int
    symbols: list[str] = Field(default_factory=list)
    exp: str = "0"

    @field_validator("exp", mode="before")
    @classmethod
    def check_exp(cls, value: str | int) -> str:
        return _rational(value)


class SchemeSpec(BaseModel):
    ambient_dim: int = Field(ge=0)
    ideal: list[str] = Field(default_factory=list)
    expected_dim: int | None = None
    variables: list[str] | None = None

    @model_validator(mode="after")
    def check_shape(self):
        if self.variables is None:
            self.variables = default_variables(self.ambient_dim)
        if len(self.variables) != self.ambient_dim:
            raise ValueError(
                f"{len(self.variables)} variables declared for ambient dimension {self.ambient_dim}"
            )
        if len(set(self.variables)) != len(self.variables):
            raise ValueError("Variable names must be distinct")
        if self.expected_dim is not None and not 0 <= self.expected_dim <= self.ambient_dim:
            raise ValueError(f"expected_dim must lie in [0, {self.ambient_dim}]")
        return self


class DivisorSpec(BaseModel):
    name: str
    y: int = Field(ge=0)
    a: str
    z: int = Field(default=0, ge=0)

    @field_validator("a", mode="before")
    @classmethod
    def check_a(cls, value: str | int) -> str:
        return _rational(value)


class ResolutionSpec(BaseModel):
    d: int = Field(ge=0)
    r: int = Field(default=1, ge=1)
    # unset: the policy default (jets.theta)
    theta: int | None = Field(default=None, ge=1)
    divisors: list[DivisorSpec]
    # keys: comma-joined sorted divisor indices, "" for the empty set
    strata: dict[str, list[TermSpec]] = Field(default_factory=dict)


class PairSpecModel(BaseModel):
    x: SchemeSpec
    y_ideal: list[str]
    # "jacobian" asks for the hypersurface Jacobian ideal; null means X is smooth
    z_ideal: list[str] | Literal["jacobian"] | None = None
    r: int = Field(default=1, ge=1)
    q: str = "1"
    l: int = Field(default=1, ge=1)
    # unset: the policy default (jets.theta)
    theta: int | None = Field(default=None, ge=1)
    hypothesis_asserted: bool = True
    # which form of the singular-locus hypothesis the fixture satisfies
    supp_z: Literal["equal", "contains", "smooth"] = "smooth"

    @field_validator("q", mode="before")
    @classmethod
    def check_q(cls, value: str | int) -> str:
        value = _rational(value)
        if Fraction(value) <= 0:
            raise ValueError("q must be positive")
        return value


class BudgetSpec(BaseModel):
    max_evaluations: int | None = Field(default=None, ge=1)
    primes: list[int] | None = None
    n_max: int | None = Field(default=None, ge=0)
    e_max: int | None = Field(default=None, ge=0)
    m_max: int | None = Field(default=None, ge=0)


class Fixture(BaseModel):
    schema_version: Literal[1]
    name: str
    description: str = ""
    symbols: dict[str, SymbolSpec] = Field(default_factory=dict)
    scheme: SchemeSpec | None = None
    pair: PairSpecModel | None = None
    resolution: ResolutionSpec | None = None
    budget: BudgetSpec = Field(default_factory=BudgetSpec)
