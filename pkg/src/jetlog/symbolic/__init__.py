from .field import FiniteField, finite_field, prime_power
from .ideal import Ideal, ideal_power, monomial_membership_check
from .parser import parse_poly, parse_polys
from .poly import GF, QQ, Domain, Poly, format_poly
from .series import TruncatedSeries, series_substitute

__all__ = [
    "GF",
    "QQ",
    "Domain",
    "FiniteField",
    "Ideal",
    "Poly",
    "TruncatedSeries",
    "finite_field",
    "format_poly",
    "ideal_power",
    "monomial_membership_check",
    "parse_poly",
    "parse_polys",
    "prime_power",
    "series_substitute",
]
