from .codec import (
    element_from_json,
    element_from_terms,
    element_to_json,
    element_to_terms,
    symbols_from_specs,
)
from .ring import (
    NEG_INFINITY,
    PT,
    ClassMonomial,
    ClassSymbol,
    MotivicElement,
    add,
    dim,
    mul,
    specialize,
    sum_elements,
    truncate,
)

__all__ = [
    "NEG_INFINITY",
    "PT",
    "ClassMonomial",
    "ClassSymbol",
    "MotivicElement",
    "add",
    "dim",
    "element_from_json",
    "element_from_terms",
    "element_to_json",
    "element_to_terms",
    "mul",
    "specialize",
    "sum_elements",
    "symbols_from_specs",
    "truncate",
]
