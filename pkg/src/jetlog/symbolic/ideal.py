"""Ideals given by generators, with powers and the monomial containment check."""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from itertools import combinations_with_replacement

from ..errors import DomainMismatch, NotMonomial
from .poly import QQ, Domain, Poly


@dataclass(frozen=True)
class Ideal:
    """Generators in a shared variable list. Zero generators are dropped, so
    the zero ideal (affine space) has no generators."""

    variables: tuple[str, ...]
    gens: tuple[Poly, ...]

    def __post_init__(self):
        kept = []
        for g in self.gens:
            if g.variables != tuple(self.variables):
                raise DomainMismatch(
                    f"Generator {g} is over {g.variables}, ideal is over {self.variables}"
                )
            if not g.is_zero():
                kept.append(g)
        object.__setattr__(self, "variables", tuple(self.variables))
        object.__setattr__(self, "gens", tuple(kept))

    @classmethod
    def of(cls, gens: Sequence[Poly], variables: Sequence[str] | None = None) -> Ideal:
        if variables is None:
            if not gens:
                raise DomainMismatch("Cannot infer the variables of an ideal with no generators")
            variables = gens[0].variables
        return cls(tuple(variables), tuple(gens))

    @classmethod
    def unit(cls, variables: Sequence[str], domain: Domain = QQ) -> Ideal:
        return cls(tuple(variables), (Poly.constant(1, variables, domain),))

    @classmethod
    def zero(cls, variables: Sequence[str]) -> Ideal:
        return cls(tuple(variables), ())

    @property
    def domain(self) -> Domain:
        return self.gens[0].domain if self.gens else QQ

    def is_zero(self) -> bool:
        return not self.gens

    def is_unit(self) -> bool:
        """True when some generator is a non-zero constant (a sufficient test)."""
        return any(g.is_constant() for g in self.gens)

    def is_monomial(self) -> bool:
        return all(g.is_monomial() for g in self.gens)

    def is_principal(self) -> bool:
        return len(self.gens) == 1

    def to_domain(self, domain: Domain) -> Ideal:
        return Ideal(self.variables, tuple(g.to_domain(domain) for g in self.gens))

    def __str__(self) -> str:
        return "(" + ", ".join(str(g) for g in self.gens) + ")"


def ideal_power(a: Ideal, l: int) -> Ideal:
    """Generators of a^l: all l-fold products of generators, deduplicated in order."""
    if l < 1:
        raise ValueError(f"Ideal power must be >= 1, got {l}")
    if a.is_zero():
        return a
    seen: set[Poly] = set()
    gens: list[Poly] = []
    for combo in combinations_with_replacement(a.gens, l):
        product = combo[0]
        for g in combo[1:]:
            product = product * g
        if product not in seen:
            seen.add(product)
            gens.append(product)
    return Ideal(a.variables, tuple(gens))


def _divides(small: tuple[int, ...], big: tuple[int, ...]) -> bool:
    return all(s <= b for s, b in zip(small, big, strict=True))


def monomial_membership_check(a: Ideal, b: Ideal) -> bool:
    """Decide a ⊂ b for monomial ideals by divisibility of generators."""
    if a.variables != b.variables:
        raise DomainMismatch("Ideals live in different rings")
    if not (a.is_monomial() and b.is_monomial()):
        raise NotMonomial(
            "Containment can only be checked for monomial ideals; assert the hypothesis instead"
        )
    b_monos = [next(iter(g.terms)) for g in b.gens]
    return all(
        any(_divides(m, next(iter(g.terms))) for m in b_monos) for g in a.gens
    )
