"""
Schemas for command reports and error bodies.

Rationals are carried as strings ("5/6", "-2", "-inf", "+inf") so every
report serializes without floating point.
"""

from fractions import Fraction
from math import inf
from typing import Any, Literal

from pydantic import BaseModel, Field


def format_rational(value: Fraction | int | float) -> str:
    if value == inf:
        return "+inf"
    if value == -inf:
        return "-inf"
    return str(Fraction(value))


def parse_rational(text: str) -> Fraction | float:
    if text == "+inf":
        return inf
    if text == "-inf":
        return -inf
    return Fraction(text)


class Error(BaseModel):
    code: str
    message: str
    details: Any | None = None


class JetsReport(BaseModel):
    level: int
    ambient_dim: int
    variables: list[str]
    equations: list[str]


class FixtureRow(BaseModel):
    name: str
    scheme: bool
    pair: bool
    resolution: bool
    description: str = ""


class FixturesReport(BaseModel):
    directory: str
    fixtures: list[FixtureRow] = Field(default_factory=list)

    def summary(self) -> str:
        return f"{len(self.fixtures)} fixtures in {self.directory}"


class CountQueryInfo(BaseModel):
    fixture: str
    level: int
    counted_level: int
    q: int
    e: int | None = None
    conditions: list[str] = Field(default_factory=list)


class CountReport(BaseModel):
    query: CountQueryInfo
    count: int
    evaluations: int | None = None
    warnings: list[str] = Field(default_factory=list)


class DimEstimate(BaseModel):
    """Point-count interpolation result; ``poly`` is ascending in q."""

    dim: int | Literal["-inf"]
    poly: list[int] | None = None
    primes: list[int]
    counts: list[int] = Field(default_factory=list)
    consistent: bool
    warnings: list[str] = Field(default_factory=list)

    @property
    def count_polynomial(self) -> list[int] | None:
        return self.poly

    @property
    def primes_used(self) -> list[int]:
        return self.primes

    @property
    def dimension(self) -> int | float:
        return -inf if self.dim == "-inf" else self.dim


class MarginRow(BaseModel):
    name: str
    y: int
    a: str
    margin: str


class KltReport(BaseModel):
    q: str
    klt: bool
    lc: bool
    margins: list[MarginRow] = Field(default_factory=list)

    def summary(self) -> str:
        return f"KLT: {str(self.klt).lower()}, LC: {str(self.lc).lower()}"


class LctReport(BaseModel):
    lct: str
    deciding: list[str] = Field(default_factory=list)

    def summary(self) -> str:
        return self.lct


class SDimReport(BaseModel):
    q: str
    e: int
    n: int
    m_shift: int
    s_dim: str
    element: list[dict] = Field(default_factory=list)


class VerdictRow(BaseModel):
    e: int
    n: int
    jet_dim: str
    lhs: str
    rhs: str
    holds: bool
    s_dim: str | None = None
    pivot_rhs: str | None = None
    pivot_holds: bool | None = None


class VerdictReport(BaseModel):
    mode: Literal["klt", "lc"]
    q: str
    l: int
    d: int
    r: int
    theta: int
    hypothesis: Literal["asserted", "checked"]
    supp_z: str
    rows: list[VerdictRow] = Field(default_factory=list)
    verdict: bool
    first_violation: list[int] | None = None
    resolution_verdict: bool | None = None
    agree: bool | None = None
    warnings: list[str] = Field(default_factory=list)

    def summary(self) -> str:
        text = f"{self.mode.upper()} inequalities: {'hold' if self.verdict else 'violated'}"
        if self.first_violation is not None:
            e, n = self.first_violation
            text += f" (first violation at e={e}, n={n})"
        if self.resolution_verdict is not None:
            text += f"; resolution data says {str(self.resolution_verdict).lower()}"
        return text


class TransformRow(BaseModel):
    prime: int
    m: int
    e: int
    level: int
    downstairs: str
    upstairs: str
    equal: bool


class TransformReport(BaseModel):
    primes: list[int]
    rows: list[TransformRow] = Field(default_factory=list)
    equal: bool

    def summary(self) -> str:
        if self.equal:
            return "EQUAL at all primes"
        bad = sorted({row.prime for row in self.rows if not row.equal})
        return "MISMATCH at primes " + ", ".join(str(p) for p in bad)


class BundleRow(BaseModel):
    n: int
    count: int
    count_next: int
    ratio: str | None = None
    in_regime: bool
    matches: bool | None = None


class BundleReport(BaseModel):
    e: int
    q: int
    d: int
    theta: int
    rows: list[BundleRow] = Field(default_factory=list)
    verdict: bool

    def summary(self) -> str:
        return f"ratio q^{self.d} in regime n >= {self.theta * self.e}: {str(self.verdict).lower()}"


class LinearBoundRow(BaseModel):
    n: int
    dim: str
    bound: int
    holds: bool


class LinearBoundReport(BaseModel):
    e: int
    d: int
    d_prime: int
    rows: list[LinearBoundRow] = Field(default_factory=list)
    slope: str
    slope_below_d: bool
    verdict: bool

    def summary(self) -> str:
        return f"slope {self.slope} (< {self.d}: {str(self.slope_below_d).lower()})"
