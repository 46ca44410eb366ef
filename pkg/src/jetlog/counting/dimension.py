"""Dimension estimates from point counts at several primes.

The count is interpolated exactly through every prime but the last one,
which is held out as a check. Counts of jet strata are usually polynomials
of higher degree than the number of primes allows; for those the balanced
base-p expansion of the count at the largest prime is tried as a
candidate and accepted only if it reproduces every observed count.
"""

from __future__ import annotations

from collections.abc import Sequence
from fractions import Fraction

from sympy import Poly as SympyPoly
from sympy import Symbol, interpolate

from ..config import policy_config
from ..jets import ContactCondition, JetSystem
from ..logging import logger
from ..schemas.report import DimEstimate
from .engine import count_points
from .query import CountQuery

_Q = Symbol("q")


def lagrange_coefficients(xs: Sequence[int], ys: Sequence[int]) -> list[Fraction]:
    """Ascending coefficients of the interpolating polynomial, trailing zeros stripped."""
    expr = interpolate(list(zip(xs, ys, strict=True)), _Q)
    coeffs = [Fraction(int(c.p), int(c.q)) for c in SympyPoly(expr, _Q).all_coeffs()[::-1]]
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def balanced_digits(value: int, base: int) -> list[int]:
    """Digits in (-base/2, base/2], least significant first."""
    digits: list[int] = []
    while value:
        r = value % base
        if r > base // 2:
            r -= base
        digits.append(r)
        value = (value - r) // base
    return digits


def _evaluate(coeffs: Sequence[int | Fraction], x: int) -> Fraction:
    return sum((Fraction(c) * x**k for k, c in enumerate(coeffs)), Fraction(0))


def _reproduces(coeffs: Sequence[int | Fraction], primes: Sequence[int], counts: Sequence[int]) -> bool:
    return all(_evaluate(coeffs, p) == c for p, c in zip(primes, counts, strict=True))


def interpolate_counts(primes: Sequence[int], counts: Sequence[int]) -> DimEstimate:
    primes, counts = list(primes), list(counts)
    if len(primes) < 3:
        raise ValueError(f"Dimension estimates need at least 3 primes, got {len(primes)}")
    if len(set(primes)) != len(primes):
        raise ValueError(f"Primes must be distinct: {primes}")

    if all(c == 0 for c in counts):
        return DimEstimate(dim="-inf", poly=[0], primes=primes, counts=counts, consistent=True)

    fit = lagrange_coefficients(primes[:-1], counts[:-1])
    if all(c.denominator == 1 for c in fit) and _reproduces(fit, primes, counts):
        poly = [int(c) for c in fit]
        return DimEstimate(
            dim=len(poly) - 1, poly=poly, primes=primes, counts=counts, consistent=True
        )

    top = max(range(len(primes)), key=lambda i: primes[i])
    candidate = balanced_digits(counts[top], primes[top])
    if candidate and _reproduces(candidate, primes, counts):
        return DimEstimate(
            dim=len(candidate) - 1, poly=candidate, primes=primes, counts=counts, consistent=True
        )

    full = lagrange_coefficients(primes, counts)
    message = (
        f"Counts {counts} at primes {primes} are not a consistent polynomial; "
        f"reporting degree {len(full) - 1} of the full interpolant"
    )
    logger.warning(message)
    return DimEstimate(
        dim=len(full) - 1,
        poly=None,
        primes=primes,
        counts=counts,
        consistent=False,
        warnings=[message],
    )


def estimate_dimension(
    system: JetSystem,
    conditions: Sequence[ContactCondition] = (),
    primes: Sequence[int] | None = None,
    budget: int | None = None,
    workers: int | None = None,
    fibre_dim: int = 0,
) -> DimEstimate:
    """Dimension of the counted jets, or of their images when each has q^fibre_dim preimages."""
    primes = list(primes) if primes is not None else list(policy_config.counting.default_primes)
    counts = [
        count_points(CountQuery(system, tuple(conditions), p), budget=budget, workers=workers)
        // p**fibre_dim
        for p in primes
    ]
    estimate = interpolate_counts(primes, counts)
    logger.info(f"Level {system.level}: dim {estimate.dim} from counts {counts}")
    return estimate
