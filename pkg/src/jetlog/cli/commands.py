"""Command handlers.

Each handler takes the parsed arguments and returns ``(report, exit_code)``;
exit code 0 means the command's verdict holds (or it has none), 1 a
negative verdict. Errors propagate as JetlogError and are rendered by main.
"""

import argparse
from fractions import Fraction

from pydantic import BaseModel

from ..config import policy_config, settings
from ..counting import (
    PointCounter,
    StratumQuery,
    bundle_ratio_check,
    enumerate_points,
    estimate_dimension,
    jet_dimension_table,
    linear_bound_check,
    stratum_query,
)
from ..errors import BadFixture
from ..fixtures import LoadedFixture, load_fixture, load_fixtures
from ..grothendieck import element_to_json
from ..jets import jet_equations
from ..resolution import (
    ResolutionData,
    deciding_divisors,
    is_klt,
    is_lc,
    lct,
    main_theorem_check,
    s_dim,
    s_element,
    transformation_check,
)
from ..schemas.report import (
    CountQueryInfo,
    CountReport,
    FixtureRow,
    FixturesReport,
    JetsReport,
    KltReport,
    LctReport,
    MarginRow,
    SDimReport,
    format_rational,
)

DEFAULT_TRANSFORM_PRIMES = [2, 3, 5]
DEFAULT_M_MAX = 4
DEFAULT_N_MAX = 3

Result = tuple[BaseModel, int]


def out_of_regime_banner(n: int, e: int, theta: int) -> str:
    return (
        f"OUT OF REGIME: n={n} < theta*e={theta * e}; "
        f"the stratum is not a stable set and the result carries no guarantee"
    )


def _resolution(fixture: LoadedFixture, data_ref: str | None) -> ResolutionData | None:
    if data_ref is None:
        return fixture.resolution
    return load_fixture(data_ref).require_resolution()


def _first(*values):
    return next((v for v in values if v is not None), None)


def _budget(args: argparse.Namespace, fixture: LoadedFixture) -> int | None:
    return _first(args.budget, fixture.spec.budget.max_evaluations)


def _target(
    fixture: LoadedFixture, n: int, e: int | None, force: bool
) -> tuple[StratumQuery, list[str]]:
    """The scheme's n-jets, or the stratum L_n^e of the pair when e is given."""
    if e is None:
        return StratumQuery(jet_equations(fixture.require_scheme(), n), ()), []
    pair = fixture.require_pair()
    warnings = [out_of_regime_banner(n, e, pair.theta)] if force and n < pair.theta * e else []
    return stratum_query(pair, n, e, force=force), warnings


def cmd_fixtures(args: argparse.Namespace) -> Result:
    directory = args.dir or settings.fixtures_dir
    rows = [
        FixtureRow(
            name=name,
            scheme=loaded.scheme is not None,
            pair=loaded.pair is not None,
            resolution=loaded.resolution is not None,
            description=loaded.spec.description,
        )
        for name, loaded in sorted(load_fixtures(directory).items())
    ]
    return FixturesReport(directory=directory, fixtures=rows), 0


def cmd_jets_eq(args: argparse.Namespace) -> Result:
    scheme = load_fixture(args.fixture).require_scheme()
    system = jet_equations(scheme, args.n)
    report = JetsReport(
        level=system.level,
        ambient_dim=scheme.ambient_dim,
        variables=list(system.variables),
        equations=[str(eq) for eq in system.equations],
    )
    return report, 0


def cmd_count(args: argparse.Namespace) -> Result:
    fixture = load_fixture(args.fixture)
    target, warnings = _target(fixture, args.n, args.e, args.force)
    query = target.count_query(args.q)
    evaluations: int | None = None
    if args.method == "enumerate":
        raw = enumerate_points(query, budget=_budget(args, fixture))
    else:
        counter = PointCounter(query, budget=_budget(args, fixture), workers=args.workers)
        raw = counter.run()
        evaluations = counter.evaluations
    report = CountReport(
        query=CountQueryInfo(
            fixture=fixture.name,
            level=args.n,
            counted_level=query.level,
            q=args.q,
            e=args.e,
            conditions=[str(c) for c in query.conditions],
        ),
        count=target.reduce(raw, args.q),
        evaluations=evaluations,
        warnings=warnings,
    )
    return report, 0


def cmd_dim(args: argparse.Namespace) -> Result:
    fixture = load_fixture(args.fixture)
    target, warnings = _target(fixture, args.n, args.e, args.force)
    primes = _first(args.primes, fixture.spec.budget.primes)
    estimate = estimate_dimension(
        target.system,
        target.conditions,
        primes,
        budget=_budget(args, fixture),
        workers=args.workers,
        fibre_dim=target.fibre_dim,
    )
    estimate.warnings = warnings + estimate.warnings
    return estimate, 0 if estimate.consistent else 1


def cmd_klt(args: argparse.Namespace) -> Result:
    fixture = load_fixture(args.fixture)
    data = fixture.require_resolution()
    q = _first(args.q, fixture.pair.q if fixture.pair else None)
    if q is None:
        raise BadFixture("klt needs --q (the fixture has no pair to take it from)")
    margins = [
        MarginRow(name=div.name, y=div.y, a=str(div.a), margin=format_rational(div.margin(q)))
        for div in data.divisors
    ]
    klt = is_klt(data, q)
    report = KltReport(q=format_rational(q), klt=klt, lc=is_lc(data, q), margins=margins)
    return report, 0 if klt else 1


def cmd_lct(args: argparse.Namespace) -> Result:
    data = load_fixture(args.fixture).require_resolution()
    return LctReport(lct=format_rational(lct(data)), deciding=deciding_divisors(data)), 0


def cmd_sdim(args: argparse.Namespace) -> Result:
    data = load_fixture(args.fixture).require_resolution()
    shift = policy_config.resolution.m_shift if args.m_shift is None else args.m_shift
    value = s_dim(data, args.q, args.e, args.n, shift)
    element = s_element(data, args.q, args.e, args.n, shift)
    report = SDimReport(
        q=format_rational(args.q),
        e=args.e,
        n=args.n,
        m_shift=shift,
        s_dim=format_rational(value),
        element=element_to_json(element),
    )
    return report, 0


def cmd_check_main(args: argparse.Namespace) -> Result:
    fixture = load_fixture(args.fixture)
    budget = fixture.spec.budget
    pair = fixture.require_pair().derive(q=args.q, l=args.l)
    data = _resolution(fixture, args.data)
    n_max = _first(args.nmax, budget.n_max, DEFAULT_N_MAX)
    e_max = _first(args.emax, budget.e_max, 0)
    primes = _first(args.primes, budget.primes)
    jet_dims = jet_dimension_table(
        pair, n_max, e_max, primes, budget=_budget(args, fixture), workers=args.workers
    )
    report = main_theorem_check(pair, data, jet_dims, mode=args.mode, n_max=n_max, e_max=e_max)
    return report, 0 if report.verdict else 1


def cmd_verify_transform(args: argparse.Namespace) -> Result:
    fixture = load_fixture(args.fixture)
    budget = fixture.spec.budget
    data = _resolution(fixture, args.data)
    if data is None:
        raise BadFixture(f"Fixture {fixture.name!r} has no resolution block and no DATA was given")
    report = transformation_check(
        fixture.require_pair(),
        data,
        m_max=_first(args.mmax, budget.m_max, DEFAULT_M_MAX),
        e_max=_first(args.emax, budget.e_max, 0),
        primes=_first(args.primes, budget.primes, DEFAULT_TRANSFORM_PRIMES),
        budget=_budget(args, fixture),
        workers=args.workers,
    )
    return report, 0 if report.equal else 1


def cmd_bundle_check(args: argparse.Namespace) -> Result:
    fixture = load_fixture(args.fixture)
    report = bundle_ratio_check(
        fixture.require_pair(),
        args.e,
        range(args.nmax + 1),
        args.q,
        budget=_budget(args, fixture),
        workers=args.workers,
    )
    return report, 0 if report.verdict else 1


def cmd_linear_bound(args: argparse.Namespace) -> Result:
    fixture = load_fixture(args.fixture)
    budget = fixture.spec.budget
    report = linear_bound_check(
        fixture.require_scheme(),
        args.e,
        _first(args.nmax, budget.n_max, DEFAULT_N_MAX),
        _first(args.primes, budget.primes),
        ambient=fixture.pair,
        budget=_budget(args, fixture),
        workers=args.workers,
    )
    return report, 0 if report.verdict else 1


def parse_fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as e:
        raise argparse.ArgumentTypeError(f"{text!r} is not a rational number") from e


def parse_primes(text: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"{text!r} is not a comma-separated list of integers") from e
