"""Contact orders of jets along ideals and divisors.

Orders are computed modulo t^{n+1}; when every generator vanishes to the
full precision the result is ``AtLeast(n + 1)``, which is never conflated
with an exact order.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from ..errors import DomainMismatch, NonPrincipalComponent, PrecisionTooLow
from ..symbolic import Domain, Ideal, Poly, TruncatedSeries, series_substitute


@dataclass(frozen=True, order=True)
class AtLeast:
    m: Fraction | int

    def __str__(self) -> str:
        return f">={self.m}"


Order = Union[int, AtLeast]


@dataclass(frozen=True)
class ContactCondition:
    """ord_ideal(jet) == order, or >= m for ``AtLeast(m)``."""

    ideal: Ideal
    order: Order

    def __post_init__(self):
        m = self.order.m if isinstance(self.order, AtLeast) else self.order
        if m < 0:
            raise ValueError(f"Contact order must be >= 0, got {m}")

    def validate(self, level: int) -> None:
        if isinstance(self.order, AtLeast):
            if self.order.m > level + 1:
                raise PrecisionTooLow(
                    f"ord >= {self.order.m} is not decidable on {level}-jets"
                )
        elif self.order > level:
            raise PrecisionTooLow(f"ord = {self.order} is not decidable on {level}-jets")

    def __str__(self) -> str:
        rel = str(self.order) if isinstance(self.order, AtLeast) else f"={self.order}"
        return f"ord{self.ideal} {rel}"


@dataclass(frozen=True)
class Jet:
    """A point of L_n(A^N): one coefficient list of length n + 1 per coordinate."""

    level: int
    coords: tuple[tuple[int | Fraction, ...], ...]
    domain: Domain

    def __post_init__(self):
        coords = tuple(tuple(self.domain.convert(c) for c in row) for row in self.coords)
        for row in coords:
            if len(row) != self.level + 1:
                raise PrecisionTooLow(
                    f"A {self.level}-jet needs {self.level + 1} coefficients per coordinate"
                )
        object.__setattr__(self, "coords", coords)

    @classmethod
    def from_flat(cls, values: Sequence[int], n: int, arity: int, domain: Domain) -> Jet:
        """Rebuild from level-major values (x_0, y_0, x_1, y_1, ...)."""
        coords = tuple(tuple(values[j * arity + i] for j in range(n + 1)) for i in range(arity))
        return cls(n, coords, domain)

    def series(self) -> list[TruncatedSeries]:
        return [
            TruncatedSeries(self.level, tuple(Poly.constant(c, (), self.domain) for c in row))
            for row in self.coords
        ]


def truncate_jet(jet: Jet, n: int) -> Jet:
    if not 0 <= n <= jet.level:
        raise PrecisionTooLow(f"Cannot truncate a {jet.level}-jet to level {n}")
    return Jet(n, tuple(row[: n + 1] for row in jet.coords), jet.domain)


def contact_order(jet: Jet, a: Ideal) -> Order:
    if len(jet.coords) != len(a.variables):
        raise DomainMismatch(
            f"Jet has {len(jet.coords)} coordinates, ideal lives in {len(a.variables)} variables"
        )
    args = jet.series()
    best: int | None = None
    for g in a.gens:
        order = series_substitute(g.to_domain(jet.domain), args, jet.level).order()
        if order is not None and (best is None or order < best):
            best = order
    return AtLeast(jet.level + 1) if best is None else best


def divisor_order(jet: Jet, components: Sequence[tuple[Ideal, Fraction | int]]) -> Fraction | AtLeast:
    total = Fraction(0)
    saturated = False
    for ideal, weight in components:
        if not ideal.is_principal():
            raise NonPrincipalComponent(
                f"Divisor component {ideal} needs exactly one generator, has {len(ideal.gens)}"
            )
        order = contact_order(jet, ideal)
        if isinstance(order, AtLeast):
            saturated = True
            total += Fraction(weight) * order.m
        else:
            total += Fraction(weight) * order
    return AtLeast(total) if saturated else total
