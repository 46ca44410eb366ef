"""Instance checks of the change-of-variables formula for a log resolution.

Downstairs, μ_X(F_Y^{-1}(m) ∩ A_e) · q^{e/r} is read off point counts of
level-n jets with n = max(m, θe); on singular X the stratum count itself
goes through lifted jets. Upstairs, the level-set integral of L^{-F_K} over
F_Ỹ^{-1}(m) ∩ F_Z̃^{-1}(e) is specialized at L = q.
"""

from __future__ import annotations

from collections.abc import Sequence
from fractions import Fraction

from ..counting import stratum_count
from ..errors import NonIntegerExponent
from ..grothendieck import specialize
from ..jets import PairSpec, stratum_level
from ..logging import logger
from ..schemas.report import TransformReport, TransformRow, format_rational
from .data import ResolutionData
from .integrals import level_set_integral


def downstairs_measure(
    pair: PairSpec,
    m: int,
    e: int,
    p: int,
    budget: int | None = None,
    workers: int | None = None,
) -> tuple[Fraction, int]:
    """(μ_X(F_Y^{-1}(m) ∩ A_e) · p^{e/r}, level counted)."""
    weight = Fraction(e, pair.r)
    if weight.denominator != 1:
        raise NonIntegerExponent(f"Weight q^({weight}) cannot be specialized at an integer")
    n = max(m, pair.theta * e)
    if e > 0 and pair.x_is_smooth():
        return Fraction(0), n
    plain = pair.derive(l=1)
    count = stratum_count(plain, n, e, p, y_order=m, budget=budget, workers=workers)
    measure = Fraction(count) / Fraction(p) ** (n * pair.d)
    return measure * Fraction(p) ** int(weight), stratum_level(plain, n, e)


def upstairs_measure(data: ResolutionData, m: int, e: int, p: int) -> Fraction:
    return specialize(level_set_integral(data, 0, m, e), p)


def transformation_check(
    pair: PairSpec,
    data: ResolutionData,
    m_max: int,
    e_max: int,
    primes: Sequence[int],
    budget: int | None = None,
    workers: int | None = None,
) -> TransformReport:
    rows: list[TransformRow] = []
    for p in primes:
        for e in range(e_max + 1):
            for m in range(m_max + 1):
                down, level = downstairs_measure(pair, m, e, p, budget, workers)
                up = upstairs_measure(data, m, e, p)
                rows.append(
                    TransformRow(
                        prime=p,
                        m=m,
                        e=e,
                        level=level,
                        downstairs=format_rational(down),
                        upstairs=format_rational(up),
                        equal=down == up,
                    )
                )
    equal = all(row.equal for row in rows)
    logger.info(f"Transformation check over primes {list(primes)}: {'equal' if equal else 'mismatch'}")
    return TransformReport(primes=list(primes), rows=rows, equal=equal)
