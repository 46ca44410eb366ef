from .fixture import (
    BudgetSpec,
    DivisorSpec,
    Fixture,
    PairSpecModel,
    ResolutionSpec,
    SchemeSpec,
    SymbolSpec,
    TermSpec,
)
from .report import (
    BundleReport,
    BundleRow,
    CountQueryInfo,
    CountReport,
    DimEstimate,
    Error,
    FixtureRow,
    FixturesReport,
    JetsReport,
    KltReport,
    LctReport,
    LinearBoundReport,
    LinearBoundRow,
    MarginRow,
    SDimReport,
    TransformReport,
    TransformRow,
    VerdictReport,
    VerdictRow,
    format_rational,
    parse_rational,
)

__all__ = [
    "BudgetSpec",
    "BundleReport",
    "BundleRow",
    "CountQueryInfo",
    "CountReport",
    "DimEstimate",
    "DivisorSpec",
    "Error",
    "Fixture",
    "FixtureRow",
    "FixturesReport",
    "JetsReport",
    "KltReport",
    "LctReport",
    "LinearBoundReport",
    "LinearBoundRow",
    "MarginRow",
    "PairSpecModel",
    "ResolutionSpec",
    "SDimReport",
    "SchemeSpec",
    "SymbolSpec",
    "TermSpec",
    "TransformReport",
    "TransformRow",
    "VerdictReport",
    "VerdictRow",
    "format_rational",
    "parse_rational",
]
