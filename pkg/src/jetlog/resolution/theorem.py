"""Jet-dimension characterization of KLT / LC pairs.

(X, qY) is KLT (resp. LC) exactly when, for every e and every n >= θe,

    dim L_n^e(lY) + e/r  <  (n + 1)(d - q/l)      (resp. <=).

main_theorem_check evaluates these inequalities on a finite table of jet
dimensions and, when resolution data is supplied, reports the verdict of
the discrepancy criterion next to it without merging the two.
"""

from __future__ import annotations

from collections.abc import Mapping
from fractions import Fraction
from math import inf
from typing import Literal

from ..errors import BadFixture, IncompleteTable, InvalidResolutionData
from ..jets import PairSpec
from ..logging import logger
from ..schemas.report import VerdictReport, VerdictRow, format_rational
from .data import ResolutionData
from .integrals import s_dim
from .thresholds import is_klt, is_lc

JetDims = Mapping[tuple[int, int], Fraction | int | float]


def pivot_bound(
    jet_dim: Fraction | int | float, d: int, q: Fraction, e: int, n: int, r: int
) -> Fraction | float:
    """Upper bound dim L_n^e(Y) - nd + (n+1)q + e/r for dim S(e, n)."""
    if jet_dim == -inf:
        return -inf
    return Fraction(jet_dim) - n * d + (n + 1) * Fraction(q) + Fraction(e, r)


def required_cells(n_max: int, e_max: int, theta: int) -> list[tuple[int, int]]:
    return [(e, n) for e in range(e_max + 1) for n in range(n_max + 1) if n >= theta * e]


def main_theorem_check(
    pair: PairSpec,
    data: ResolutionData | None,
    jet_dims: JetDims,
    mode: Literal["klt", "lc"] = "klt",
    n_max: int | None = None,
    e_max: int | None = None,
) -> VerdictReport:
    if not pair.hypothesis_asserted:
        raise BadFixture(
            f"The comparison needs a^{pair.l} in J^{pair.theta}; it is neither asserted nor "
            f"verifiable by the monomial check"
        )
    if data is not None and data.d != pair.d:
        raise InvalidResolutionData(f"Resolution data has d={data.d}, the pair has d={pair.d}")
    if n_max is None:
        n_max = max((n for _, n in jet_dims), default=0)
    if e_max is None:
        e_max = max((e for e, _ in jet_dims), default=0)

    cells = required_cells(n_max, e_max, pair.theta)
    missing = [cell for cell in cells if cell not in jet_dims]
    if missing:
        raise IncompleteTable(missing)

    q, d, r, l = pair.q, pair.d, pair.r, pair.l
    rows: list[VerdictRow] = []
    for e, n in cells:
        jet_dim = jet_dims[(e, n)]
        lhs = jet_dim + Fraction(e, r) if jet_dim != -inf else -inf
        rhs = (n + 1) * (d - q / l)
        holds = lhs < rhs if mode == "klt" else lhs <= rhs
        row = VerdictRow(
            e=e,
            n=n,
            jet_dim=format_rational(jet_dim),
            lhs=format_rational(lhs),
            rhs=format_rational(rhs),
            holds=holds,
        )
        if data is not None and l == 1:
            s = s_dim(data, q, e, n)
            bound = pivot_bound(jet_dim, d, q, e, n, r)
            row.s_dim = format_rational(s)
            row.pivot_rhs = format_rational(bound)
            row.pivot_holds = s <= bound
        rows.append(row)

    verdict = all(row.holds for row in rows)
    first = next(([row.e, row.n] for row in rows if not row.holds), None)
    report = VerdictReport(
        mode=mode,
        q=format_rational(q),
        l=l,
        d=d,
        r=r,
        theta=pair.theta,
        hypothesis="checked" if pair.hypothesis_check() is not None else "asserted",
        supp_z=pair.supp_z,
        rows=rows,
        verdict=verdict,
        first_violation=first,
    )
    if rows and all(row.jet_dim == "-inf" for row in rows):
        message = (
            "Every stratum L_n^e(lY) in the tested range is empty; "
            "the jet-side inequalities hold vacuously"
        )
        logger.warning(message)
        report.warnings.append(message)
    if data is not None:
        report.resolution_verdict = is_klt(data, q) if mode == "klt" else is_lc(data, q)
        report.agree = report.resolution_verdict == verdict
        if not report.agree:
            message = (
                "Jet-side verdict over the tested range differs from the resolution data; "
                "the range may be too small to exhibit a violation"
            )
            logger.warning(message)
            report.warnings.append(message)
    logger.info(f"Main-theorem check ({mode}, q={q}): {'holds' if verdict else 'violated'}")
    return report
