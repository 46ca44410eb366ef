"""Acceptance checker utilities.

Provides report-field expectations (dotted paths, ``*`` for every list
element), repeatability analysis (byte-identical output across repeated
runs), and runtime statistics (mean/p95).
"""

from typing import Any

MISSING = object()


def lookup(report: Any, path: str) -> list[Any]:
    """Values at a dotted path; ``*`` fans out over a list."""
    values = [report]
    for part in path.split("."):
        step: list[Any] = []
        for value in values:
            if part == "*" and isinstance(value, list):
                step.extend(value)
            elif isinstance(value, list) and part.isdigit():
                index = int(part)
                step.append(value[index] if index < len(value) else MISSING)
            elif isinstance(value, dict):
                step.append(value.get(part, MISSING))
            else:
                step.append(MISSING)
        values = step
    return values


def check_repeatability(outputs: list[str]) -> dict:
    if len(outputs) < 2:
        return {"identical_runs": 1.0}
    same = sum(1 for out in outputs[1:] if out == outputs[0])
    return {"identical_runs": same / (len(outputs) - 1)}


def compute_runtime_stats(runtimes: list[int]) -> dict:
    if not runtimes:
        return {"mean_ms": 0, "min_ms": 0, "max_ms": 0, "p95_ms": 0}

    runtimes_sorted = sorted(runtimes)
    mean = sum(runtimes) / len(runtimes)
    p95_idx = int(len(runtimes_sorted) * 0.95)
    p95 = runtimes_sorted[min(p95_idx, len(runtimes_sorted) - 1)]

    return {
        "mean_ms": int(mean),
        "min_ms": runtimes_sorted[0],
        "max_ms": runtimes_sorted[-1],
        "p95_ms": p95,
    }


def check_expectations(
    exit_code: int, report: Any, case: dict, runtime_ms: int | None = None
) -> list[dict]:
    """Check one run against the case's expectations.

    Returns list of {"check": str, "passed": bool, "detail": str}.
    """
    results = []

    expected_exit = case.get("expect_exit", 0)
    results.append(
        {
            "check": "exit_code",
            "passed": exit_code == expected_exit,
            "detail": f"{exit_code} (expected {expected_exit})",
        }
    )

    for path, expected in case.get("expect", {}).items():
        found = lookup(report, path)
        passed = bool(found) and all(value == expected for value in found)
        shown = ["<missing>" if v is MISSING else v for v in found]
        results.append(
            {
                "check": f"field:{path}",
                "passed": passed,
                "detail": f"{shown[0] if len(shown) == 1 else shown} (expected {expected!r})",
            }
        )

    max_seconds = case.get("max_seconds")
    if max_seconds is not None and runtime_ms is not None:
        results.append(
            {
                "check": "runtime",
                "passed": runtime_ms <= max_seconds * 1000,
                "detail": f"{runtime_ms}ms (limit {max_seconds}s)",
            }
        )

    return results
