"""Acceptance harness for jetlog.

Each case in the cases directory is a CLI invocation plus the exit code
and report fields it must produce. Cases run in-process through the CLI
entry point, repeated to confirm the output is byte-identical.

Usage:
    python -m eval.runner --cases eval/cases
    python -m eval.runner --cases eval/cases -n 3 --json-output eval/results/results.json
"""

import argparse
import contextlib
import io
import json
import sys
import time
from pathlib import Path

from eval.checker import check_expectations, check_repeatability, compute_runtime_stats
from src.jetlog.cli import main as jetlog_main


def load_cases(cases_dir: str) -> list[dict]:
    path = Path(cases_dir)
    cases = []
    for f in sorted(path.glob("*.json")):
        cases.append(json.loads(f.read_text()))
    return cases


def run_case(case: dict) -> tuple[int, str, int]:
    """(exit code, stdout, runtime in ms) of one in-process CLI run."""
    buffer = io.StringIO()
    start = time.time()
    with contextlib.redirect_stdout(buffer):
        code = jetlog_main(case["argv"])
    return code, buffer.getvalue(), int((time.time() - start) * 1000)


def evaluate_case(case: dict, n: int) -> dict:
    case_id = case.get("id", "unknown")
    print(f"\n[{case_id}] {case.get('description', '')}")
    print(f"  jetlog {' '.join(case['argv'])}")

    runs = [run_case(case) for _ in range(n)]
    code, out, runtime_ms = runs[0]
    try:
        report = json.loads(out)
    except json.JSONDecodeError:
        report = None

    runtime = compute_runtime_stats([r[2] for r in runs])
    repeatability = check_repeatability([r[1] for r in runs])
    exp_results = check_expectations(code, report, case, runtime_ms)
    if repeatability["identical_runs"] < 1.0:
        exp_results.append(
            {
                "check": "repeatability",
                "passed": False,
                "detail": f"{repeatability['identical_runs']:.0%} of reruns identical",
            }
        )

    print(f"  Runtime: mean={runtime['mean_ms']}ms, p95={runtime['p95_ms']}ms")
    for r in exp_results:
        status = "PASS" if r["passed"] else "FAIL"
        print(f"    {r['check']}: {status} ({r['detail']})")

    return {
        "case_id": case_id,
        "description": case.get("description", ""),
        "criterion": case.get("criterion"),
        "pass": all(r["passed"] for r in exp_results),
        "runtime": runtime,
        "repeatability": repeatability,
        "expectation_results": exp_results,
    }


def main():
    parser = argparse.ArgumentParser(description="jetlog acceptance harness")
    parser.add_argument("--cases", default="eval/cases", help="Directory with acceptance cases")
    parser.add_argument("-n", type=int, default=2, help="Repeat count for determinism check")
    parser.add_argument("--only", default=None, help="Run only case ids containing this text")
    parser.add_argument("--json-output", type=str, default=None, help="Path to save JSON results")
    args = parser.parse_args()

    cases = load_cases(args.cases)
    if args.only:
        cases = [c for c in cases if args.only in c.get("id", "")]
    if not cases:
        print(f"No cases found in {args.cases}")
        sys.exit(1)

    print(f"jetlog acceptance harness - Cases: {len(cases)}, Repeats: {args.n}")
    print("=" * 60)

    results = [evaluate_case(case, args.n) for case in cases]

    print("\n" + "=" * 60)
    passed = sum(1 for r in results if r["pass"])
    total_expectations = sum(len(r["expectation_results"]) for r in results)
    expectations_passed = sum(
        sum(1 for e in r["expectation_results"] if e["passed"]) for r in results
    )
    print(f"Results: {passed}/{len(results)} cases passed")
    print(f"Expectations: {expectations_passed}/{total_expectations} checks passed")

    if args.json_output:
        output_path = Path(args.json_output)
        output_path.parent.mkdir(parents=True, exist_ok=True)
        output_data = {
            "repeats": args.n,
            "cases_passed": passed,
            "cases_total": len(results),
            "expectations_passed": expectations_passed,
            "expectations_total": total_expectations,
            "results": results,
        }
        output_path.write_text(json.dumps(output_data, indent=2))
        print(f"\nResults saved to: {args.json_output}")

    sys.exit(0 if passed == len(results) else 1)


if __name__ == "__main__":
    main()
