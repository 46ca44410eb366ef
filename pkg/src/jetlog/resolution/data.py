"""SNC resolution data: divisor orders, discrepancies and strata classes."""

from __future__ import annotations

from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field
from fractions import Fraction

from ..config import policy_config
from ..errors import InvalidResolutionData, MissingStratum
from ..grothendieck import (
    ClassSymbol,
    MotivicElement,
    dim,
    element_from_terms,
    element_to_terms,
    symbols_from_specs,
)
from ..schemas.fixture import DivisorSpec, ResolutionSpec, SymbolSpec

Subset = frozenset[int]


@dataclass(frozen=True)
class Divisor:
    name: str
    y: int
    a: Fraction
    z: int = 0

    def margin(self, q: Fraction) -> Fraction:
        """-q y + a + 1: positive for KLT, non-negative for LC."""
        return -Fraction(q) * self.y + self.a + 1


def subset_key(subset: Iterable[int]) -> str:
    return ",".join(str(i) for i in sorted(subset))


def parse_subset_key(key: str) -> Subset:
    key = key.strip()
    if not key:
        return frozenset()
    try:
        return frozenset(int(part) for part in key.split(","))
    except ValueError as e:
        raise InvalidResolutionData(f"Bad strata key {key!r}; use comma-joined indices") from e


@dataclass(frozen=True)
class ResolutionData:
    d: int
    divisors: tuple[Divisor, ...]
    strata: Mapping[Subset, MotivicElement] = field(default_factory=dict)
    r: int = 1
    theta: int = 2

    def __post_init__(self):
        object.__setattr__(self, "divisors", tuple(self.divisors))
        object.__setattr__(self, "strata", {frozenset(k): v for k, v in self.strata.items()})
        if self.r < 1 or self.theta < 1:
            raise InvalidResolutionData("r and theta must be positive")
        for i, div in enumerate(self.divisors):
            if (self.r * div.a).denominator != 1:
                raise InvalidResolutionData(
                    f"Divisor {div.name!r}: r*a = {self.r * div.a} is not an integer"
                )
            if div.y < 0 or div.z < 0:
                raise InvalidResolutionData(f"Divisor {div.name!r}: y and z must be >= 0")
            if div.y == 0 and div.z == 0:
                raise InvalidResolutionData(
                    f"Divisor {div.name!r} (index {i}) needs y > 0 or z > 0"
                )
        if frozenset() not in self.strata:
            raise InvalidResolutionData("The empty-set stratum [D_0] must be supplied")
        for subset, element in self.strata.items():
            if any(not 0 <= i < len(self.divisors) for i in subset):
                raise InvalidResolutionData(f"Stratum {subset_key(subset)!r} names unknown divisors")
            if element.is_zero():
                continue
            if dim(element) > self.d - len(subset):
                raise InvalidResolutionData(
                    f"Stratum {subset_key(subset)!r} has dim {dim(element)} > d - |J| = "
                    f"{self.d - len(subset)}"
                )
            if any(c <= 0 for c in element.leading_part().terms.values()):
                raise InvalidResolutionData(
                    f"Stratum {subset_key(subset)!r} must have positive leading coefficients"
                )

    @classmethod
    def from_spec(
        cls, spec: ResolutionSpec, symbols: Mapping[str, SymbolSpec] | None = None
    ) -> ResolutionData:
        table: Mapping[str, ClassSymbol] = symbols_from_specs(symbols or {})
        divisors = tuple(
            Divisor(name=d.name, y=d.y, a=Fraction(d.a), z=d.z) for d in spec.divisors
        )
        strata = {
            parse_subset_key(key): element_from_terms(terms, table)
            for key, terms in spec.strata.items()
        }
        theta = policy_config.jets.theta if spec.theta is None else spec.theta
        return cls(d=spec.d, divisors=divisors, strata=strata, r=spec.r, theta=theta)

    def to_spec(self) -> ResolutionSpec:
        return ResolutionSpec(
            d=self.d,
            r=self.r,
            theta=self.theta,
            divisors=[
                DivisorSpec(name=d.name, y=d.y, a=str(d.a), z=d.z) for d in self.divisors
            ],
            strata={
                subset_key(k): element_to_terms(v)
                for k, v in sorted(self.strata.items(), key=lambda kv: sorted(kv[0]))
            },
        )

    def stratum(self, subset: Iterable[int], required: bool = False) -> MotivicElement:
        """[D_J°]; an absent key is the empty stratum unless ``required``."""
        key = frozenset(subset)
        if key in self.strata:
            return self.strata[key]
        if required:
            raise MissingStratum(
                f"Stratum [D_J] for J = {{{subset_key(key)}}} is needed but not supplied",
                details={"J": sorted(key)},
            )
        return MotivicElement.zero()

    def all_subsets(self) -> list[tuple[int, ...]]:
        """Every J in subset-lexicographic order."""
        count = len(self.divisors)
        subsets = [tuple(i for i in range(count) if mask >> i & 1) for mask in range(1 << count)]
        return sorted(subsets)
