"""Sparse multivariate polynomials over Q or a finite field.

A Poly is an immutable map from exponent vectors to non-zero coefficients
over a fixed, ordered variable list. Rational coefficients are exact
``Fraction`` values; finite-field coefficients are the integer element
codes of ``symbolic.field``, the field order carried by the ``Domain``.
Mixing variable lists or domains raises DomainMismatch.
"""

from __future__ import annotations

import numbers
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from ..errors import DomainMismatch
from .field import FiniteField, finite_field, prime_power

Coeff = Union[Fraction, int]
Monomial = tuple[int, ...]


@dataclass(frozen=True)
class Domain:
    """Coefficient domain: ``modulus=None`` is Q, otherwise the field F_q with q = modulus."""

    modulus: int | None = None

    def __post_init__(self):
        if self.modulus is not None:
            prime_power(self.modulus)

    @property
    def is_rational(self) -> bool:
        return self.modulus is None

    @property
    def field(self) -> FiniteField:
        if self.modulus is None:
            raise DomainMismatch("QQ is not a finite field")
        return finite_field(self.modulus)

    @property
    def characteristic(self) -> int:
        return 0 if self.modulus is None else self.field.characteristic

    @property
    def degree(self) -> int:
        return 1 if self.modulus is None else self.field.degree

    def convert(self, value: Coeff | str) -> Coeff:
        """Integers are element codes; fractions go through the prime subfield."""
        if self.modulus is None:
            return Fraction(value)
        if isinstance(value, numbers.Integral):
            return self.field.element(int(value))
        frac = Fraction(value)
        p = self.field.characteristic
        if frac.denominator % p == 0:
            raise DomainMismatch(f"{frac} has no image in {self}")
        return frac.numerator * pow(frac.denominator, -1, p) % p

    def from_integer(self, n: int) -> Coeff:
        return Fraction(n) if self.modulus is None else self.field.from_integer(n)

    def add(self, a: Coeff, b: Coeff) -> Coeff:
        if self.modulus is None:
            return a + b
        return self.field.add(a, b)

    def mul(self, a: Coeff, b: Coeff) -> Coeff:
        if self.modulus is None:
            return a * b
        return self.field.mul(a, b)

    def neg(self, a: Coeff) -> Coeff:
        if self.modulus is None:
            return -a
        return self.field.neg(a)

    def inv(self, a: Coeff) -> Coeff:
        if self.modulus is None:
            if not a:
                raise DomainMismatch("0 has no inverse in QQ")
            return 1 / Fraction(a)
        return self.field.inv(a)

    def pow(self, a: Coeff, exp: int) -> Coeff:
        if self.modulus is None:
            return a**exp
        return self.field.pow(a, exp)

    def __str__(self) -> str:
        return "QQ" if self.modulus is None else f"GF({self.modulus})"


QQ = Domain()


def GF(q: int) -> Domain:
    return Domain(q)


@dataclass(frozen=True, eq=False)
class Poly:
    variables: tuple[str, ...]
    terms: Mapping[Monomial, Coeff]
    domain: Domain = QQ

    def __post_init__(self):
        arity = len(self.variables)
        clean: dict[Monomial, Coeff] = {}
        for mono, coeff in self.terms.items():
            if len(mono) != arity:
                raise DomainMismatch(
                    f"Exponent vector {mono} does not match variables {self.variables}"
                )
            value = self.domain.convert(coeff)
            if value:
                clean[tuple(mono)] = value
        object.__setattr__(self, "terms", clean)

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, variables: Sequence[str], domain: Domain = QQ) -> Poly:
        return cls(tuple(variables), {}, domain)

    @classmethod
    def constant(cls, value: Coeff, variables: Sequence[str], domain: Domain = QQ) -> Poly:
        return cls(tuple(variables), {(0,) * len(variables): value}, domain)

    @classmethod
    def var(cls, name: str, variables: Sequence[str], domain: Domain = QQ) -> Poly:
        variables = tuple(variables)
        if name not in variables:
            raise DomainMismatch(f"Unknown variable {name!r}; known: {variables}")
        mono = tuple(1 if v == name else 0 for v in variables)
        return cls(variables, {mono: 1}, domain)

    # -- structure ----------------------------------------------------------

    def _check(self, other: Poly) -> None:
        if self.variables != other.variables or self.domain != other.domain:
            raise DomainMismatch(
                f"Operands differ: {self.variables}/{self.domain} vs "
                f"{other.variables}/{other.domain}"
            )

    def _coerce(self, other: Poly | Coeff) -> Poly:
        if isinstance(other, Poly):
            self._check(other)
            return other
        return Poly.constant(other, self.variables, self.domain)

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(not any(mono) for mono in self.terms)

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def constant_term(self) -> Coeff:
        return self.terms.get((0,) * len(self.variables), self.domain.convert(0))

    def total_degree(self) -> int:
        return max((sum(mono) for mono in self.terms), default=-1)

    def sorted_terms(self) -> list[tuple[Monomial, Coeff]]:
        """Terms in graded order: higher total degree first, then lex on exponents."""
        return sorted(
            self.terms.items(), key=lambda item: (-sum(item[0]), tuple(-e for e in item[0]))
        )

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other: Poly | Coeff) -> Poly:
        other = self._coerce(other)
        dom = self.domain
        out = dict(self.terms)
        for mono, coeff in other.terms.items():
            out[mono] = dom.add(out[mono], coeff) if mono in out else coeff
        return Poly(self.variables, out, dom)

    __radd__ = __add__

    def __neg__(self) -> Poly:
        return Poly(
            self.variables, {m: self.domain.neg(c) for m, c in self.terms.items()}, self.domain
        )

    def __sub__(self, other: Poly | Coeff) -> Poly:
        return self + (-self._coerce(other))

    def __rsub__(self, other: Coeff) -> Poly:
        return (-self) + other

    def __mul__(self, other: Poly | Coeff) -> Poly:
        if not isinstance(other, Poly):
            return self.scalar(other)
        self._check(other)
        dom = self.domain
        out: dict[Monomial, Coeff] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                mono = tuple(a + b for a, b in zip(m1, m2, strict=True))
                prod = dom.mul(c1, c2)
                out[mono] = dom.add(out[mono], prod) if mono in out else prod
        return Poly(self.variables, out, dom)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> Poly:
        if exponent < 0:
            raise ValueError("Negative powers are not polynomials")
        result = Poly.constant(1, self.variables, self.domain)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def scalar(self, value: Coeff) -> Poly:
        c = self.domain.convert(value)
        return Poly(
            self.variables, {m: self.domain.mul(c, v) for m, v in self.terms.items()}, self.domain
        )

    def derivative(self, name: str) -> Poly:
        idx = self.variables.index(name)
        out: dict[Monomial, Coeff] = {}
        for mono, coeff in self.terms.items():
            if mono[idx]:
                lowered = mono[:idx] + (mono[idx] - 1,) + mono[idx + 1 :]
                out[lowered] = self.domain.mul(coeff, self.domain.from_integer(mono[idx]))
        return Poly(self.variables, out, self.domain)

    # -- evaluation and substitution -----------------------------------------

    def eval(self, point: Mapping[str, Coeff] | Sequence[Coeff]) -> Coeff:
        if isinstance(point, Mapping):
            try:
                values = [self.domain.convert(point[v]) for v in self.variables]
            except KeyError as e:
                raise DomainMismatch(f"No value supplied for variable {e}") from e
        else:
            if len(point) != len(self.variables):
                raise DomainMismatch(
                    f"Expected {len(self.variables)} values, got {len(point)}"
                )
            values = [self.domain.convert(v) for v in point]
        dom = self.domain
        total = dom.convert(0)
        for mono, coeff in self.terms.items():
            term = coeff
            for value, exp in zip(values, mono, strict=True):
                if exp:
                    term = dom.mul(term, dom.pow(value, exp))
            total = dom.add(total, term)
        return total

    def compose(self, substitutions: Mapping[str, Poly], variables: Sequence[str]) -> Poly:
        """Substitute a Poly in ``variables`` for each of this polynomial's variables.

        Variables without an entry must themselves occur in the target list.
        """
        variables = tuple(variables)
        images: list[Poly] = []
        for name in self.variables:
            if name in substitutions:
                image = substitutions[name]
                if image.variables != variables or image.domain != self.domain:
                    raise DomainMismatch(f"Substitution for {name!r} is over the wrong ring")
            else:
                image = Poly.var(name, variables, self.domain)
            images.append(image)

        powers: list[dict[int, Poly]] = [{} for _ in images]

        def power(i: int, e: int) -> Poly:
            cache = powers[i]
            if e not in cache:
                cache[e] = images[i] ** e
            return cache[e]

        result = Poly.zero(variables, self.domain)
        for mono, coeff in self.terms.items():
            term = Poly.constant(coeff, variables, self.domain)
            for i, exp in enumerate(mono):
                if exp:
                    term = term * power(i, exp)
            result = result + term
        return result

    def embed(self, variables: Sequence[str]) -> Poly:
        """Re-express this polynomial over a superset of its variables."""
        variables = tuple(variables)
        missing = [v for v in self.variables if v not in variables]
        if missing:
            raise DomainMismatch(f"Cannot embed: variables {missing} not in target")
        index = [variables.index(v) for v in self.variables]
        out: dict[Monomial, Coeff] = {}
        for mono, coeff in self.terms.items():
            target = [0] * len(variables)
            for i, exp in zip(index, mono, strict=True):
                target[i] = exp
            out[tuple(target)] = coeff
        return Poly(variables, out, self.domain)

    def to_domain(self, domain: Domain) -> Poly:
        if domain == self.domain:
            return self
        if not self.domain.is_rational:
            raise DomainMismatch(f"Cannot move {self.domain} coefficients to {domain}")
        return Poly(self.variables, dict(self.terms), domain)

    # -- protocol -----------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Poly):
            return NotImplemented
        return (
            self.variables == other.variables
            and self.domain == other.domain
            and self.terms == other.terms
        )

    def __hash__(self) -> int:
        return hash((self.variables, self.domain, frozenset(self.terms.items())))

    def __str__(self) -> str:
        return format_poly(self)

    def __repr__(self) -> str:
        return f"Poly({format_poly(self)!r}, {self.variables}, {self.domain})"


def _format_monomial(variables: Iterable[str], mono: Monomial) -> str:
    parts = []
    for name, exp in zip(variables, mono, strict=True):
        if exp == 1:
            parts.append(name)
        elif exp > 1:
            parts.append(f"{name}^{exp}")
    return "*".join(parts)


def format_poly(poly: Poly) -> str:
    """Print in the documented grammar: ``2*x_0*y_1 - x_1^2 + 1/2``."""
    if poly.is_zero():
        return "0"
    pieces: list[str] = []
    for i, (mono, coeff) in enumerate(poly.sorted_terms()):
        negative = poly.domain.is_rational and coeff < 0
        magnitude = -coeff if negative else coeff
        body = _format_monomial(poly.variables, mono)
        if not body:
            text = str(magnitude)
        elif magnitude == 1:
            text = body
        else:
            text = f"{magnitude}*{body}"
        if i == 0:
            pieces.append(f"-{text}" if negative else text)
        else:
            pieces.append(f" - {text}" if negative else f" + {text}")
    return "".join(pieces)
