"""KLT / LC membership and the log canonical threshold from resolution data."""

from fractions import Fraction
from math import inf

from .data import ResolutionData


def klt_margin(data: ResolutionData, q: Fraction | int) -> list[Fraction]:
    return [div.margin(Fraction(q)) for div in data.divisors]


def is_klt(data: ResolutionData, q: Fraction | int) -> bool:
    return all(m > 0 for m in klt_margin(data, q))


def is_lc(data: ResolutionData, q: Fraction | int) -> bool:
    return all(m >= 0 for m in klt_margin(data, q))


def lct(data: ResolutionData) -> Fraction | float:
    """min over y_i > 0 of (a_i + 1) / y_i, +inf when no divisor has y_i > 0."""
    values = [(div.a + 1) / div.y for div in data.divisors if div.y > 0]
    return min(values) if values else inf


def deciding_divisors(data: ResolutionData) -> list[str]:
    threshold = lct(data)
    if threshold == inf:
        return []
    return [div.name for div in data.divisors if div.y > 0 and (div.a + 1) / div.y == threshold]
