"""Empirical checks on jet strata: the bundle law and the linear dimension bound."""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from fractions import Fraction

from ..errors import BadFixture
from ..jets import (
    AffineScheme,
    ContactCondition,
    JetSystem,
    Order,
    PairSpec,
    fibre_dimension,
    jet_equations,
    stratum_conditions,
    stratum_level,
)
from ..logging import logger
from ..schemas.report import (
    BundleReport,
    BundleRow,
    DimEstimate,
    LinearBoundReport,
    LinearBoundRow,
    format_rational,
)
from .dimension import estimate_dimension
from .engine import count_points
from .query import CountQuery


@dataclass(frozen=True)
class StratumQuery:
    """Ambient jets at ``system.level`` whose n-truncations form the stratum.

    Each point of the stratum has exactly q^fibre_dim preimages.
    """

    system: JetSystem
    conditions: tuple[ContactCondition, ...]
    fibre_dim: int = 0

    def count_query(self, q: int) -> CountQuery:
        return CountQuery(self.system, self.conditions, q)

    def reduce(self, count: int, q: int) -> int:
        return count // q**self.fibre_dim


def stratum_query(
    pair: PairSpec,
    n: int,
    e: int,
    y_order: Order | None = None,
    on_y: bool = True,
    force: bool = False,
) -> StratumQuery:
    conditions = stratum_conditions(pair, n, e, y_order=y_order, on_y=on_y, force=force)
    level = stratum_level(pair, n, e)
    system = jet_equations(AffineScheme.affine_space(pair.x.variables), level)
    return StratumQuery(system, tuple(conditions), fibre_dimension(pair, e))


def stratum_count(
    pair: PairSpec,
    n: int,
    e: int,
    q: int,
    y_order: Order | None = None,
    on_y: bool = True,
    force: bool = False,
    budget: int | None = None,
    workers: int | None = None,
) -> int:
    """#L_n^e(lY)(F_q), through the lifted jets when X is singular."""
    target = stratum_query(pair, n, e, y_order, on_y, force)
    raw = count_points(target.count_query(q), budget=budget, workers=workers)
    return target.reduce(raw, q)


def stratum_dimension(
    pair: PairSpec,
    n: int,
    e: int,
    primes: Sequence[int] | None = None,
    force: bool = False,
    budget: int | None = None,
    workers: int | None = None,
) -> DimEstimate:
    """dim L_n^e(lY) from point counts."""
    target = stratum_query(pair, n, e, force=force)
    return estimate_dimension(
        target.system,
        target.conditions,
        primes,
        budget=budget,
        workers=workers,
        fibre_dim=target.fibre_dim,
    )


def bundle_ratio_check(
    pair: PairSpec,
    e: int,
    n_range: Iterable[int],
    q: int,
    budget: int | None = None,
    workers: int | None = None,
) -> BundleReport:
    """Compare #π_{n+1}(A_e) with q^d · #π_n(A_e) on the jet side.

    Rows below the stability level are reported without a verdict; levels
    n < e, where ord_Z = e is not yet decided, are skipped.
    """
    d = pair.d
    counts: dict[int, int] = {}

    def count_at(n: int) -> int:
        if n not in counts:
            counts[n] = stratum_count(
                pair, n, e, q, on_y=False, force=True, budget=budget, workers=workers
            )
        return counts[n]

    rows: list[BundleRow] = []
    for n in n_range:
        if n < e:
            logger.debug(f"Skipping n={n}: ord_Z = {e} is not decided on {n}-jets")
            continue
        low, high = count_at(n), count_at(n + 1)
        in_regime = n >= pair.theta * e
        ratio = Fraction(high, low) if low else None
        if not in_regime:
            matches = None
        elif ratio is None:
            matches = high == 0
        else:
            matches = ratio == q**d
        rows.append(
            BundleRow(
                n=n,
                count=low,
                count_next=high,
                ratio=format_rational(ratio) if ratio is not None else None,
                in_regime=in_regime,
                matches=matches,
            )
        )
    verdict = all(row.matches for row in rows if row.in_regime)
    logger.info(f"Bundle check e={e} q={q}: {'ratio q^d' if verdict else 'ratio mismatch'}")
    return BundleReport(e=e, q=q, d=d, theta=pair.theta, rows=rows, verdict=verdict)


def least_squares_slope(points: Sequence[tuple[int, Fraction | int]]) -> Fraction:
    if len(points) < 2:
        return Fraction(0)
    count = len(points)
    mean_x = Fraction(sum(x for x, _ in points), count)
    mean_y = sum((Fraction(y) for _, y in points), Fraction(0)) / count
    num = sum(((x - mean_x) * (Fraction(y) - mean_y) for x, y in points), Fraction(0))
    den = sum(((x - mean_x) ** 2 for x, _ in points), Fraction(0))
    return num / den


def linear_bound_check(
    scheme: AffineScheme,
    e: int,
    n_max: int,
    primes: Sequence[int] | None = None,
    ambient: PairSpec | None = None,
    budget: int | None = None,
    workers: int | None = None,
) -> LinearBoundReport:
    """dim L_n^e(Y) <= (n + 1) d' at every level, and the fitted slope against d.

    Without an ambient pair, Y sits in the affine space of its variables.
    Levels below the stability level theta*e are skipped.
    """
    if scheme.expected_dim is None:
        raise BadFixture("linear-bound needs expected_dim declared on the scheme")
    if ambient is None:
        ambient = PairSpec.smooth_ambient(scheme)
    else:
        ambient = ambient.derive(l=1, y_ideal=scheme.ideal)
    d_prime = scheme.expected_dim

    rows: list[LinearBoundRow] = []
    finite: list[tuple[int, int]] = []
    for n in range(ambient.theta * e, n_max + 1):
        estimate = stratum_dimension(ambient, n, e, primes, budget=budget, workers=workers)
        bound = (n + 1) * d_prime
        value = estimate.dimension
        rows.append(
            LinearBoundRow(n=n, dim=format_rational(value), bound=bound, holds=value <= bound)
        )
        if estimate.dim != "-inf":
            finite.append((n, estimate.dim))

    slope = least_squares_slope(finite)
    below = slope < ambient.d
    return LinearBoundReport(
        e=e,
        d=ambient.d,
        d_prime=d_prime,
        rows=rows,
        slope=format_rational(slope),
        slope_below_d=below,
        verdict=below and all(row.holds for row in rows),
    )


def jet_dimension_table(
    pair: PairSpec,
    n_max: int,
    e_max: int,
    primes: Sequence[int] | None = None,
    budget: int | None = None,
    workers: int | None = None,
) -> dict[tuple[int, int], Fraction | int | float]:
    """dim L_n^e(lY) for every e <= e_max and theta*e <= n <= n_max."""
    table: dict[tuple[int, int], Fraction | int | float] = {}
    for e in range(e_max + 1):
        for n in range(pair.theta * e, n_max + 1):
            estimate = stratum_dimension(pair, n, e, primes, budget=budget, workers=workers)
            if not estimate.consistent:
                logger.warning(f"Dimension at e={e}, n={n} rests on inconsistent counts")
            table[(e, n)] = estimate.dimension
    return table
