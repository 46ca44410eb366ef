"""JSON codec for motivic elements and class-symbol tables.

An element is a list of ``{"coeff": int, "symbols": [name, ...], "exp": "p/q"}``
terms; symbols are resolved against a separately serialized table of
``{name: {"dim": int, "count_poly": [c0, c1, ...] | null}}``.
"""

from collections.abc import Mapping
from fractions import Fraction

from ..errors import BadFixture
from ..schemas.fixture import SymbolSpec, TermSpec
from .ring import PT, ClassMonomial, ClassSymbol, MotivicElement


def symbols_from_specs(specs: Mapping[str, SymbolSpec]) -> dict[str, ClassSymbol]:
    table = {PT.name: PT}
    for name, spec in specs.items():
        if name == PT.name:
            continue
        table[name] = ClassSymbol(
            name, spec.dim, tuple(spec.count_poly) if spec.count_poly is not None else None
        )
    return table


def element_from_terms(
    terms: list[TermSpec], symbols: Mapping[str, ClassSymbol]
) -> MotivicElement:
    out: dict = {}
    for term in terms:
        try:
            factors = [symbols[name] for name in term.symbols]
        except KeyError as e:
            raise BadFixture(f"Unknown class symbol {e}; declare it in the symbols table") from e
        key = (ClassMonomial.of(*factors), Fraction(term.exp))
        out[key] = out.get(key, 0) + term.coeff
    return MotivicElement(out)


def element_to_terms(element: MotivicElement) -> list[TermSpec]:
    return [
        TermSpec(coeff=coeff, symbols=mono.names(), exp=str(exp))
        for (mono, exp), coeff in element.sorted_terms()
    ]


def element_to_json(element: MotivicElement) -> list[dict]:
    return [t.model_dump() for t in element_to_terms(element)]


def element_from_json(data: list[dict], symbols: Mapping[str, ClassSymbol]) -> MotivicElement:
    return element_from_terms([TermSpec.model_validate(t) for t in data], symbols)
