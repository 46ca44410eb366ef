"""Motivic measures and integrals on the resolution.

For SNC data the measure of a level set of (F_{D_1}, ..., F_{D_s}) on
L_∞(X̃) is [D_J°](L - 1)^{|J|} L^{-Σ m_i} with J the support of m, and
integrals of L^{-Σ w_i F_{D_i}} are sums of such terms. The sets
M(J, n, e) of exponent vectors with Σ y_i m_i = n + shift and
Σ z_i m_i = e are finite because every divisor has y_i > 0 or z_i > 0.
"""

from __future__ import annotations

from collections.abc import Mapping, Sequence
from fractions import Fraction

from ..config import policy_config
from ..errors import NotIntegrable
from ..grothendieck import NEG_INFINITY, MotivicElement, dim, sum_elements, truncate
from .data import ResolutionData

L_MINUS_ONE = MotivicElement.polynomial_in_L((-1, 1))


def measure_level_set(data: ResolutionData, m: Sequence[int]) -> MotivicElement:
    if len(m) != len(data.divisors):
        raise ValueError(f"Contact vector has {len(m)} entries for {len(data.divisors)} divisors")
    if any(v < 0 for v in m):
        raise ValueError(f"Contact orders must be >= 0, got {list(m)}")
    support = [i for i, v in enumerate(m) if v > 0]
    stratum = data.stratum(support)
    if stratum.is_zero():
        return stratum
    return (stratum * L_MINUS_ONE ** len(support)).scale_L(-sum(m))


def _solutions(
    weights: Sequence[tuple[int, int]], target_y: int, target_z: int
) -> list[tuple[int, ...]]:
    """Positive vectors m with Σ y_i m_i = target_y and Σ z_i m_i = target_z, lexicographic."""
    if not weights:
        return [()] if target_y == 0 and target_z == 0 else []
    (y, z), rest = weights[0], weights[1:]
    rest_y = sum(w for w, _ in rest)
    rest_z = sum(w for _, w in rest)
    out: list[tuple[int, ...]] = []
    m = 1
    while y * m + rest_y <= target_y and z * m + rest_z <= target_z:
        for tail in _solutions(rest, target_y - y * m, target_z - z * m):
            out.append((m, *tail))
        m += 1
    return out


def enumerate_M(
    data: ResolutionData, J: Sequence[int], n: int, e: int, m_shift: int | None = None
) -> list[tuple[int, ...]]:
    """All m in Z_{>0}^J with Σ y_i m_i = n + m_shift and Σ z_i m_i = e."""
    shift = policy_config.resolution.m_shift if m_shift is None else m_shift
    if e < 0:
        raise ValueError(f"e must be >= 0, got {e}")
    weights = [(data.divisors[i].y, data.divisors[i].z) for i in sorted(J)]
    return _solutions(weights, n + shift, e)


def level_set_integral(
    data: ResolutionData, q: Fraction | int, target_y: int, e: int
) -> MotivicElement:
    """Σ_J Σ_{m} [D_J°](L-1)^{|J|} L^{-Σ (-q y_i + a_i + 1) m_i} over Σ y m = target_y, Σ z m = e."""
    q = Fraction(q)
    pieces: list[MotivicElement] = []
    for J in data.all_subsets():
        weights = [(data.divisors[i].y, data.divisors[i].z) for i in J]
        vectors = _solutions(weights, target_y, e)
        if not vectors:
            continue
        base = data.stratum(J, required=True) * L_MINUS_ONE ** len(J)
        if base.is_zero():
            continue
        for m in vectors:
            exponent = sum(
                (data.divisors[i].margin(q) * mi for i, mi in zip(J, m, strict=True)), Fraction(0)
            )
            pieces.append(base.scale_L(-exponent))
    return sum_elements(pieces)


def s_element(
    data: ResolutionData, q: Fraction | int, e: int, n: int, m_shift: int | None = None
) -> MotivicElement:
    """S(e, n): the integral of L^{q F_Ỹ - F_K} over F_Ỹ^{-1}(n + shift) ∩ F_Z̃^{-1}(e)."""
    shift = policy_config.resolution.m_shift if m_shift is None else m_shift
    return level_set_integral(data, q, n + shift, e)


def s_dim(
    data: ResolutionData, q: Fraction | int, e: int, n: int, m_shift: int | None = None
) -> Fraction | float:
    """max over admissible (J, m) of dim[D_J°] + |J| - Σ c_i m_i, without expanding S(e, n)."""
    shift = policy_config.resolution.m_shift if m_shift is None else m_shift
    q = Fraction(q)
    best: Fraction | float = NEG_INFINITY
    for J in data.all_subsets():
        weights = [(data.divisors[i].y, data.divisors[i].z) for i in J]
        vectors = _solutions(weights, n + shift, e)
        if not vectors:
            continue
        stratum = data.stratum(J, required=True)
        if stratum.is_zero():
            continue
        top = dim(stratum) + len(J)
        margins = [data.divisors[i].margin(q) for i in J]
        for m in vectors:
            value = top - sum((c * mi for c, mi in zip(margins, m, strict=True)), Fraction(0))
            if value > best:
                best = value
    return best


def integrate(
    data: ResolutionData,
    weights: Mapping[str, Fraction | int] | None = None,
    cutoff: int | None = None,
) -> MotivicElement:
    """∫ L^{-Σ w_i F_{D_i}} dμ over L_∞(X̃), exact modulo terms of dimension <= cutoff.

    Unlisted divisors get w_i = a_i, so the default is ∫ L^{-F_K}.
    """
    cutoff = policy_config.ring.cutoff if cutoff is None else cutoff
    weights = dict(weights or {})
    unknown = set(weights) - {div.name for div in data.divisors}
    if unknown:
        raise ValueError(f"Weights given for unknown divisors {sorted(unknown)}")
    rates = [Fraction(weights.get(div.name, div.a)) + 1 for div in data.divisors]

    pieces: list[MotivicElement] = []
    for J in data.all_subsets():
        stratum = data.stratum(J, required=True)
        if stratum.is_zero():
            continue
        bad = [data.divisors[i].name for i in J if rates[i] <= 0]
        if bad:
            raise NotIntegrable(
                f"Divisors {bad} have w + 1 <= 0; the integral diverges",
                details={"divisors": bad},
            )
        base = stratum * L_MINUS_ONE ** len(J)
        top = dim(base)

        def walk(pos: int, exponent: Fraction, J: tuple[int, ...] = J, base=base, top=top) -> None:
            if top - exponent <= cutoff:
                return
            if pos == len(J):
                pieces.append(base.scale_L(-exponent))
                return
            m = 1
            while top - exponent - rates[J[pos]] * m > cutoff:
                walk(pos + 1, exponent + rates[J[pos]] * m)
                m += 1

        walk(0, Fraction(0))
    return truncate(sum_elements(pieces), cutoff)
