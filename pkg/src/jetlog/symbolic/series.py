"""Truncated power series in t with polynomial coefficients.

A TruncatedSeries of precision n is known modulo t^{n+1}; its coefficient
of t^j is a Poly in the jet-coefficient variables. series_substitute
plugs such series into a polynomial and expands modulo t^{n+1}.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

from ..errors import DomainMismatch, PrecisionTooLow
from .poly import QQ, Domain, Poly


@dataclass(frozen=True)
class TruncatedSeries:
    precision: int
    coeffs: tuple[Poly, ...]

    def __post_init__(self):
        if self.precision < 0:
            raise PrecisionTooLow(f"Precision must be >= 0, got {self.precision}")
        if len(self.coeffs) != self.precision + 1:
            raise PrecisionTooLow(
                f"Series of precision {self.precision} needs {self.precision + 1} "
                f"coefficients, got {len(self.coeffs)}"
            )
        object.__setattr__(self, "coeffs", tuple(self.coeffs))

    @classmethod
    def constant(
        cls, value: int, precision: int, variables: Sequence[str], domain: Domain = QQ
    ) -> TruncatedSeries:
        zero = Poly.zero(variables, domain)
        head = Poly.constant(value, variables, domain)
        return cls(precision, (head,) + (zero,) * precision)

    @property
    def variables(self) -> tuple[str, ...]:
        return self.coeffs[0].variables

    def truncate(self, n: int) -> TruncatedSeries:
        if n > self.precision:
            raise PrecisionTooLow(f"Cannot raise precision {self.precision} to {n}")
        return TruncatedSeries(n, self.coeffs[: n + 1])

    def _aligned(self, other: TruncatedSeries) -> int:
        if self.variables != other.variables:
            raise DomainMismatch("Series coefficients live in different rings")
        return min(self.precision, other.precision)

    def __add__(self, other: TruncatedSeries) -> TruncatedSeries:
        n = self._aligned(other)
        return TruncatedSeries(n, tuple(a + b for a, b in zip(self.coeffs[: n + 1], other.coeffs)))

    def __mul__(self, other: TruncatedSeries) -> TruncatedSeries:
        n = self._aligned(other)
        zero = Poly.zero(self.variables, self.coeffs[0].domain)
        out = []
        for j in range(n + 1):
            acc = zero
            for i in range(j + 1):
                a, b = self.coeffs[i], other.coeffs[j - i]
                if not a.is_zero() and not b.is_zero():
                    acc = acc + a * b
            out.append(acc)
        return TruncatedSeries(n, tuple(out))

    def scalar(self, value) -> TruncatedSeries:
        return TruncatedSeries(self.precision, tuple(c.scalar(value) for c in self.coeffs))

    def order(self) -> int | None:
        """Index of the first non-zero coefficient, None when all vanish."""
        for j, c in enumerate(self.coeffs):
            if not c.is_zero():
                return j
        return None


def series_substitute(f: Poly, args: Sequence[TruncatedSeries], n: int) -> TruncatedSeries:
    if len(args) != len(f.variables):
        raise DomainMismatch(f"Need one series per variable of f ({len(f.variables)}), got {len(args)}")
    low = [a.precision for a in args if a.precision < n]
    if low:
        raise PrecisionTooLow(f"Series precision {min(low)} is below the requested level {n}")
    if not args:
        variables: tuple[str, ...] = ()
    else:
        variables = args[0].variables
    args = [a.truncate(n) for a in args]

    powers: list[dict[int, TruncatedSeries]] = [{1: a} for a in args]

    def power(i: int, e: int) -> TruncatedSeries:
        cache = powers[i]
        if e not in cache:
            half = power(i, e // 2)
            sq = half * half
            cache[e] = sq * args[i] if e % 2 else sq
        return cache[e]

    result = TruncatedSeries.constant(0, n, variables, f.domain)
    for mono, coeff in f.terms.items():
        term = TruncatedSeries.constant(1, n, variables, f.domain).scalar(coeff)
        for i, exp in enumerate(mono):
            if exp:
                term = term * power(i, exp)
        result = result + term
    return result
