"""Polynomial string grammar.

Grammar (the printer's output is a fixed point of parse -> print):

    poly    := term (("+" | "-") term)*
    term    := [coeff ["*"]] factor ("*" factor)* | coeff
    factor  := name ["^" integer]
    coeff   := integer ["/" integer]

The ``*`` between factors is optional ("2x y" == "2*x*y") and parentheses
group as usual. The text is tokenised first: only declared names, integers,
the operators ``+ - * / ^``, parentheses and whitespace get through to
sympy. Parsing is then delegated to sympy with the caret treated as
exponentiation and every declared variable bound to a plain symbol, so
names such as ``E`` or ``I`` never collide with sympy constants.
"""

import re
from collections.abc import Sequence
from fractions import Fraction

from sympy import Poly as SympyPoly
from sympy import Symbol
from sympy.parsing.sympy_parser import (
    convert_xor,
    implicit_multiplication,
    parse_expr,
    standard_transformations,
)

from ..errors import ParseError
from .poly import QQ, Domain, Poly

_TRANSFORMS = (*standard_transformations, implicit_multiplication, convert_xor)
_TOKEN = re.compile(r"\s*(?:([A-Za-z_][A-Za-z0-9_]*)|(\d+)|([-+*/^()]))")


def _check_tokens(text: str, variables: tuple[str, ...]) -> None:
    pos = 0
    unknown: set[str] = set()
    while pos < len(text):
        match = _TOKEN.match(text, pos)
        if match is None or match.end() == pos:
            if text[pos:].strip() == "":
                break
            raise ParseError(f"Unexpected character {text[pos]!r} at {pos} in {text!r}")
        name = match.group(1)
        if name is not None and name not in variables:
            unknown.add(name)
        pos = match.end()
    if unknown:
        raise ParseError(
            f"Polynomial {text!r} uses undeclared variables {sorted(unknown)}; "
            f"declared: {list(variables)}"
        )


def parse_poly(text: str, variables: Sequence[str], domain: Domain = QQ) -> Poly:
    variables = tuple(variables)
    _check_tokens(text, variables)
    symbols = {name: Symbol(name) for name in variables}
    try:
        expr = parse_expr(text, local_dict=dict(symbols), transformations=_TRANSFORMS)
    except Exception as e:
        raise ParseError(f"Cannot parse polynomial {text!r}: {e}") from e

    try:
        if variables:
            sp = SympyPoly(expr, *[symbols[v] for v in variables], domain="QQ")
            terms = {
                tuple(int(e) for e in mono): Fraction(int(c.p), int(c.q))
                for mono, c in sp.terms()
            }
        else:
            value = expr.as_numer_denom()
            terms = {(): Fraction(int(value[0]), int(value[1]))}
    except Exception as e:
        raise ParseError(f"{text!r} is not a polynomial with rational coefficients: {e}") from e

    return Poly(variables, terms, QQ).to_domain(domain)


def parse_polys(texts: Sequence[str], variables: Sequence[str], domain: Domain = QQ) -> list[Poly]:
    return [parse_poly(t, variables, domain) for t in texts]
