from fractions import Fraction
from pathlib import Path

import pytest

from src.jetlog.fixtures import LoadedFixture, load_fixture
from src.jetlog.grothendieck import PT, ClassSymbol, MotivicElement
from src.jetlog.resolution import Divisor, ResolutionData

FIXTURES_DIR = Path(__file__).resolve().parent.parent / "fixtures"

P1 = ClassSymbol("P1", 1, (1, 1))


def shipped(name: str) -> LoadedFixture:
    return load_fixture(str(FIXTURES_DIR / f"{name}.json"))


@pytest.fixture
def fixtures_dir() -> Path:
    return FIXTURES_DIR


@pytest.fixture
def point_fixture() -> LoadedFixture:
    return shipped("point")


@pytest.fixture
def node_fixture() -> LoadedFixture:
    return shipped("node")


@pytest.fixture
def cusp_fixture() -> LoadedFixture:
    return shipped("cusp")


@pytest.fixture
def cone_fixture() -> LoadedFixture:
    return shipped("cone")


@pytest.fixture
def a2_fixture() -> LoadedFixture:
    return shipped("a2")


@pytest.fixture
def blowup_data() -> ResolutionData:
    """Blow-up of the origin in A^2: one exceptional line E with y=1, a=1."""
    return ResolutionData(
        d=2,
        divisors=(Divisor("E", 1, Fraction(1)),),
        strata={
            frozenset(): MotivicElement.polynomial_in_L((-1, 0, 1)),
            frozenset({0}): MotivicElement.of_class(P1),
        },
    )


@pytest.fixture
def axes_data() -> ResolutionData:
    """The coordinate axes in A^2 as an SNC pair."""
    line = MotivicElement.polynomial_in_L((-1, 1))
    return ResolutionData(
        d=2,
        divisors=(Divisor("D1", 1, Fraction(0)), Divisor("D2", 1, Fraction(0))),
        strata={
            frozenset(): line * line,
            frozenset({0}): line,
            frozenset({1}): line,
            frozenset({0, 1}): MotivicElement.of_class(PT),
        },
    )
