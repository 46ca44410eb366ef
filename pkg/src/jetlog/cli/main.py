"""jetlog command-line interface.

Usage:
    jetlog fixtures
    jetlog jets eq fixtures/node.json 1
    jetlog count node --n 1 --q 2
    jetlog dim a2 --n 1 --primes 2,3,5
    jetlog lct cusp --format text
    jetlog check-main cusp --q 1/2 --nmax 6
    jetlog verify-transform point --primes 2,3,5 --mmax 4
"""

import argparse
import sys
from collections.abc import Callable, Sequence

from .. import __version__
from ..config import settings
from ..errors import JetlogError
from ..logging import logger, new_run_id, print_settings
from ..schemas.report import Error
from . import commands
from .output import error_body, render, render_error

INVALID_ARGUMENT_EXIT = 2


def _common_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format",
        choices=["json", "text"],
        default=settings.output_format,
        help="Report format (default from JETLOG_OUTPUT_FORMAT)",
    )
    common.add_argument(
        "--budget", type=int, default=None, help="Maximum residue evaluations per count"
    )
    common.add_argument(
        "--workers", type=int, default=None, help="Worker processes for point counting"
    )
    return common


def _add(
    subparsers,
    name: str,
    handler: Callable,
    common: argparse.ArgumentParser,
    help_text: str,
) -> argparse.ArgumentParser:
    parser = subparsers.add_parser(name, parents=[common], help=help_text, description=help_text)
    parser.set_defaults(handler=handler)
    return parser


def build_parser() -> argparse.ArgumentParser:
    common = _common_parser()
    parser = argparse.ArgumentParser(
        prog="jetlog",
        description="Jet schemes, motivic measures and KLT/LC thresholds in exact arithmetic",
    )
    parser.add_argument("--version", action="version", version=f"jetlog {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = _add(sub, "fixtures", commands.cmd_fixtures, common, "List the fixtures in a directory")
    p.add_argument("--dir", default=None, help="Fixtures directory (default JETLOG_FIXTURES_DIR)")

    jets = sub.add_parser("jets", help="Jet scheme equations")
    jets_sub = jets.add_subparsers(dest="jets_command", required=True)
    p = _add(jets_sub, "eq", commands.cmd_jets_eq, common, "Defining equations of L_n(X)")
    p.add_argument("fixture")
    p.add_argument("n", type=int)

    for name, handler, help_text in (
        ("count", commands.cmd_count, "Exact F_q-point count of L_n(X) or a stratum L_n^e"),
        ("dim", commands.cmd_dim, "Dimension of L_n(X) or L_n^e from point counts"),
    ):
        p = _add(sub, name, handler, common, help_text)
        p.add_argument("fixture")
        p.add_argument("--n", type=int, required=True, help="Jet level")
        p.add_argument("--e", type=int, default=None, help="Contact order along Z (uses the pair)")
        p.add_argument("--force", action="store_true", help="Allow n < theta*e")
        if name == "count":
            p.add_argument("--q", type=int, required=True, help="Field size, a prime power")
            p.add_argument("--method", choices=["recursive", "enumerate"], default="recursive")
        else:
            p.add_argument("--primes", type=commands.parse_primes, default=None)

    p = _add(sub, "klt", commands.cmd_klt, common, "KLT / LC membership from resolution data")
    p.add_argument("fixture")
    p.add_argument("--q", type=commands.parse_fraction, default=None)

    p = _add(sub, "lct", commands.cmd_lct, common, "Log canonical threshold from resolution data")
    p.add_argument("fixture")

    p = _add(sub, "sdim", commands.cmd_sdim, common, "dim S(e, n) and the element S(e, n)")
    p.add_argument("fixture")
    p.add_argument("--q", type=commands.parse_fraction, required=True)
    p.add_argument("--e", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m-shift", type=int, choices=[0, 1], default=None)

    p = _add(
        sub,
        "check-main",
        commands.cmd_check_main,
        common,
        "Jet-dimension inequalities against the resolution verdict",
    )
    p.add_argument("fixture")
    p.add_argument("data", nargs="?", default=None, help="Fixture supplying resolution data")
    p.add_argument("--q", type=commands.parse_fraction, default=None)
    p.add_argument("--l", type=int, default=None)
    p.add_argument("--nmax", type=int, default=None)
    p.add_argument("--emax", type=int, default=None)
    p.add_argument("--mode", choices=["klt", "lc"], default="klt")
    p.add_argument("--primes", type=commands.parse_primes, default=None)

    p = _add(
        sub,
        "verify-transform",
        commands.cmd_verify_transform,
        common,
        "Downstairs point counts against the upstairs level-set integral",
    )
    p.add_argument("fixture")
    p.add_argument("data", nargs="?", default=None, help="Fixture supplying resolution data")
    p.add_argument("--primes", type=commands.parse_primes, default=None)
    p.add_argument("--mmax", type=int, default=None)
    p.add_argument("--emax", type=int, default=None)

    p = _add(sub, "bundle-check", commands.cmd_bundle_check, common, "Stratum growth ratio q^d")
    p.add_argument("fixture")
    p.add_argument("--e", type=int, required=True)
    p.add_argument("--nmax", type=int, required=True)
    p.add_argument("--q", type=int, required=True)

    p = _add(sub, "linear-bound", commands.cmd_linear_bound, common, "dim L_n^e(Y) <= (n+1) d'")
    p.add_argument("fixture")
    p.add_argument("--nmax", type=int, default=None)
    p.add_argument("--e", type=int, default=0)
    p.add_argument("--primes", type=commands.parse_primes, default=None)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    run_id = new_run_id()
    logger.debug(f"Run {run_id}: {args.command}")
    print_settings(settings)

    try:
        report, code = args.handler(args)
    except JetlogError as e:
        logger.error(f"{e.code}: {e.message}")
        print(render_error(error_body(e), args.format))
        return e.exit_code
    except ValueError as e:
        logger.error(f"Invalid argument: {e}")
        print(render_error(Error(code="INVALID_ARGUMENT", message=str(e)), args.format))
        return INVALID_ARGUMENT_EXIT

    print(render(report, args.format))
    return code


if __name__ == "__main__":
    sys.exit(main())
