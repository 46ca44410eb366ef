"""Error hierarchy shared by every module.

Each error carries a stable ``code`` (reported in JSON error bodies) and a
distinct ``exit_code`` used by the CLI. Exit code 1 is reserved for a
negative verdict that is not an error.
"""

from typing import Any


class JetlogError(Exception):
    code = "JETLOG_ERROR"
    exit_code = 2

    def __init__(self, message: str, details: Any | None = None):
        super().__init__(message)
        self.message = message
        self.details = details


class BadFixture(JetlogError):
    code = "BAD_FIXTURE"
    exit_code = 3


class ParseError(JetlogError):
    code = "PARSE_ERROR"
    exit_code = 4


class DomainMismatch(JetlogError):
    code = "DOMAIN_MISMATCH"
    exit_code = 5


class PrecisionTooLow(JetlogError):
    code = "PRECISION_TOO_LOW"
    exit_code = 6


class NotMonomial(JetlogError):
    code = "NOT_MONOMIAL"
    exit_code = 7


class NonPrincipalComponent(JetlogError):
    code = "NON_PRINCIPAL_COMPONENT"
    exit_code = 8


class StabilityViolation(JetlogError):
    code = "STABILITY_VIOLATION"
    exit_code = 9


class UnsupportedShape(JetlogError):
    code = "UNSUPPORTED_SHAPE"
    exit_code = 10


class BudgetExceeded(JetlogError):
    code = "BUDGET_EXCEEDED"
    exit_code = 11

    def __init__(self, required: int, budget: int):
        super().__init__(
            f"Evaluation budget of {budget} exceeded (at least {required} needed)",
            details={"required": required, "budget": budget},
        )
        self.required = required
        self.budget = budget

    def __reduce__(self):
        # Keeps the error picklable across the worker pool
        return (type(self), (self.required, self.budget))


class MissingCountPolynomial(JetlogError):
    code = "MISSING_COUNT_POLYNOMIAL"
    exit_code = 12


class NonIntegerExponent(JetlogError):
    code = "NON_INTEGER_EXPONENT"
    exit_code = 13


class MissingStratum(JetlogError):
    code = "MISSING_STRATUM"
    exit_code = 14


class IncompleteTable(JetlogError):
    code = "INCOMPLETE_TABLE"
    exit_code = 15

    def __init__(self, missing: list[tuple[int, int]]):
        listed = ", ".join(f"(e={e}, n={n})" for e, n in missing)
        super().__init__(
            f"Jet dimension table is missing {len(missing)} entries: {listed}",
            details={"missing": [list(pair) for pair in missing]},
        )
        self.missing = missing

    def __reduce__(self):
        return (type(self), (self.missing,))


class InvalidResolutionData(JetlogError):
    code = "INVALID_RESOLUTION_DATA"
    exit_code = 16


class NotIntegrable(JetlogError):
    code = "NOT_INTEGRABLE"
    exit_code = 17
