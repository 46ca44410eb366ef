"""Formal arithmetic in the completed Grothendieck ring with rational powers of L.

Elements are finite sums  c * [X_1]...[X_k] * L^e  with integer c, a multiset
of class symbols and a rational exponent e. The ring is the free commutative
structure on the symbols: the scissor relation is never applied, so two
elements are compared through ``specialize`` at several field sizes.

Dimension follows the usual convention: dim of a term is the sum of its
symbol dimensions plus its exponent, dim of a sum is the maximum over its
terms, and the empty sum has dimension NEG_INFINITY.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from math import inf
from typing import Union

from ..errors import InvalidResolutionData, MissingCountPolynomial, NonIntegerExponent

NEG_INFINITY = -inf

Dim = Union[Fraction, float]
Exponent = Fraction

PT_NAME = "PT"


def _strip(coeffs: Iterable[int]) -> tuple[int, ...]:
    out = list(coeffs)
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


@dataclass(frozen=True, order=True)
class ClassSymbol:
    """The class of a variety: name, dimension and optional point-count polynomial.

    ``count_poly`` holds integer coefficients in ascending degree, so
    ``(1, 1)`` is L + 1, the class of the projective line.
    """

    name: str
    dim: int | float
    count_poly: tuple[int, ...] | None = field(default=None, compare=False)

    def __post_init__(self):
        if self.count_poly is not None:
            poly = _strip(self.count_poly)
            object.__setattr__(self, "count_poly", poly)
            degree = len(poly) - 1 if poly else NEG_INFINITY
            if degree != self.dim:
                raise InvalidResolutionData(
                    f"Class {self.name!r}: count polynomial degree {degree} != dim {self.dim}"
                )
        if self.name == PT_NAME and (self.dim != 0 or self.count_poly not in (None, (1,))):
            raise InvalidResolutionData("PT is reserved for the point class (dim 0, count 1)")

    def count(self, q: int) -> int:
        if self.count_poly is None:
            raise MissingCountPolynomial(f"Class {self.name!r} has no point-count polynomial")
        return sum(c * q**k for k, c in enumerate(self.count_poly))


PT = ClassSymbol(PT_NAME, 0, (1,))


@dataclass(frozen=True, order=True)
class ClassMonomial:
    """A product of class symbols; the empty product is the point class."""

    factors: tuple[ClassSymbol, ...] = ()

    @classmethod
    def of(cls, *symbols: ClassSymbol) -> ClassMonomial:
        return cls(tuple(sorted(s for s in symbols if s.name != PT_NAME)))

    @property
    def dim(self) -> int | float:
        return sum((s.dim for s in self.factors), 0)

    def __mul__(self, other: ClassMonomial) -> ClassMonomial:
        return ClassMonomial(tuple(sorted(self.factors + other.factors)))

    def names(self) -> list[str]:
        return [s.name for s in self.factors]

    def count(self, q: int) -> int:
        return reduce(lambda acc, s: acc * s.count(q), self.factors, 1)


TermKey = tuple[ClassMonomial, Fraction]


def _term_sort_key(item: tuple[TermKey, int]):
    (mono, exp), _ = item
    return (-(mono.dim + exp), mono.names(), exp)


@dataclass(frozen=True, eq=False)
class MotivicElement:
    terms: Mapping[TermKey, int] = field(default_factory=dict)

    def __post_init__(self):
        clean: dict[TermKey, int] = {}
        for (mono, exp), coeff in self.terms.items():
            if coeff and mono.dim != NEG_INFINITY:
                key = (mono, Fraction(exp))
                clean[key] = clean.get(key, 0) + coeff
        object.__setattr__(self, "terms", {k: c for k, c in clean.items() if c})

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls) -> MotivicElement:
        return cls({})

    @classmethod
    def one(cls) -> MotivicElement:
        return cls({(ClassMonomial(), Fraction(0)): 1})

    @classmethod
    def lefschetz(cls, exponent: Fraction | int = 1, coeff: int = 1) -> MotivicElement:
        """coeff * L^exponent."""
        return cls({(ClassMonomial(), Fraction(exponent)): coeff})

    @classmethod
    def of_class(cls, symbol: ClassSymbol, exponent: Fraction | int = 0) -> MotivicElement:
        return cls({(ClassMonomial.of(symbol), Fraction(exponent)): 1})

    @classmethod
    def polynomial_in_L(cls, coeffs: Sequence[int]) -> MotivicElement:
        """sum_k coeffs[k] L^k, e.g. ``(-1, 0, 1)`` is L^2 - 1."""
        return cls({(ClassMonomial(), Fraction(k)): c for k, c in enumerate(coeffs)})

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other: MotivicElement) -> MotivicElement:
        return add(self, other)

    def __neg__(self) -> MotivicElement:
        return MotivicElement({k: -c for k, c in self.terms.items()})

    def __sub__(self, other: MotivicElement) -> MotivicElement:
        return add(self, -other)

    def __mul__(self, other: MotivicElement) -> MotivicElement:
        return mul(self, other)

    def __pow__(self, exponent: int) -> MotivicElement:
        return reduce(mul, [self] * exponent, MotivicElement.one())

    def scale_L(self, exponent: Fraction | int) -> MotivicElement:
        """Multiply by L^exponent."""
        shift = Fraction(exponent)
        return MotivicElement({(m, e + shift): c for (m, e), c in self.terms.items()})

    def is_zero(self) -> bool:
        return not self.terms

    def leading_part(self) -> MotivicElement:
        top = dim(self)
        return MotivicElement(
            {(m, e): c for (m, e), c in self.terms.items() if m.dim + e == top}
        )

    def symbols(self) -> set[ClassSymbol]:
        return {s for (m, _), _c in self.terms.items() for s in m.factors}

    def sorted_terms(self) -> list[tuple[TermKey, int]]:
        return sorted(self.terms.items(), key=_term_sort_key)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MotivicElement):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for i, ((mono, exp), coeff) in enumerate(self.sorted_terms()):
            factors = [f"[{n}]" for n in mono.names()]
            if exp == 1:
                factors.append("L")
            elif exp:
                factors.append(f"L^{exp}" if exp.denominator == 1 and exp > 0 else f"L^({exp})")
            body = "*".join(factors)
            magnitude = abs(coeff)
            if not body:
                text = str(magnitude)
            elif magnitude == 1:
                text = body
            else:
                text = f"{magnitude}*{body}"
            if i == 0:
                parts.append(f"-{text}" if coeff < 0 else text)
            else:
                parts.append(f" - {text}" if coeff < 0 else f" + {text}")
        return "".join(parts)

    __repr__ = __str__


def add(a: MotivicElement, b: MotivicElement) -> MotivicElement:
    out = dict(a.terms)
    for key, coeff in b.terms.items():
        out[key] = out.get(key, 0) + coeff
    return MotivicElement(out)


def mul(a: MotivicElement, b: MotivicElement) -> MotivicElement:
    out: dict[TermKey, int] = {}
    for (m1, e1), c1 in a.terms.items():
        for (m2, e2), c2 in b.terms.items():
            key = (m1 * m2, e1 + e2)
            out[key] = out.get(key, 0) + c1 * c2
    return MotivicElement(out)


def dim(a: MotivicElement) -> Dim:
    return max((m.dim + e for (m, e) in a.terms), default=NEG_INFINITY)


def truncate(a: MotivicElement, m: Fraction | int) -> MotivicElement:
    """Image in M / F_m: drop every term of dimension <= m."""
    return MotivicElement({(mo, e): c for (mo, e), c in a.terms.items() if mo.dim + e > m})


def specialize(a: MotivicElement, q: int) -> Fraction:
    """Counting realization: L -> q and each class -> its point count at q."""
    total = Fraction(0)
    for (mono, exp), coeff in a.terms.items():
        if exp.denominator != 1:
            raise NonIntegerExponent(f"Cannot specialize L^{exp} at an integer point")
        total += coeff * mono.count(q) * Fraction(q) ** int(exp)
    return total


def sum_elements(elements: Iterable[MotivicElement]) -> MotivicElement:
    return reduce(add, elements, MotivicElement.zero())
