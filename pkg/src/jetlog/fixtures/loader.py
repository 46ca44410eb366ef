"""Fixture loader.

A fixture is one JSON document holding any of a scheme, a pair, resolution
data, a class-symbol table and run budgets. ``load_fixture`` accepts a path
or a bare name resolved against the fixtures directory; ``load_fixtures``
scans a directory, logging and skipping invalid files.
"""

import json
from dataclasses import dataclass
from pathlib import Path

from pydantic import ValidationError

from ..config import settings
from ..errors import BadFixture, JetlogError
from ..jets import AffineScheme, PairSpec
from ..logging import logger
from ..resolution import ResolutionData
from ..schemas.fixture import Fixture


@dataclass(frozen=True)
class LoadedFixture:
    """A validated fixture with its blocks built into domain objects."""

    spec: Fixture
    path: Path
    scheme: AffineScheme | None
    pair: PairSpec | None
    resolution: ResolutionData | None

    @property
    def name(self) -> str:
        return self.spec.name

    def require_scheme(self) -> AffineScheme:
        if self.scheme is None:
            raise BadFixture(f"Fixture {self.name!r} has no scheme block")
        return self.scheme

    def require_pair(self) -> PairSpec:
        if self.pair is None:
            raise BadFixture(f"Fixture {self.name!r} has no pair block")
        return self.pair

    def require_resolution(self) -> ResolutionData:
        if self.resolution is None:
            raise BadFixture(f"Fixture {self.name!r} has no resolution block")
        return self.resolution


def resolve_fixture_path(ref: str, fixtures_dir: str | None = None) -> Path:
    path = Path(ref)
    if path.exists():
        return path
    base = Path(fixtures_dir or settings.fixtures_dir)
    for candidate in (base / ref, base / f"{ref}.json"):
        if candidate.exists():
            return candidate
    raise BadFixture(f"Fixture not found: {ref} (looked in {base})")


def build_fixture(spec: Fixture, path: Path) -> LoadedFixture:
    try:
        scheme = AffineScheme.from_spec(spec.scheme) if spec.scheme else None
        pair = PairSpec.from_model(spec.pair) if spec.pair else None
        resolution = (
            ResolutionData.from_spec(spec.resolution, spec.symbols) if spec.resolution else None
        )
    except BadFixture:
        raise
    except JetlogError as e:
        raise BadFixture(f"Fixture {spec.name!r}: {e.message}", details={"cause": e.code}) from e
    if pair is not None and resolution is not None and resolution.d != pair.d:
        raise BadFixture(
            f"Fixture {spec.name!r}: resolution d={resolution.d} but X has dimension {pair.d}"
        )
    return LoadedFixture(spec, path, scheme, pair, resolution)


def load_fixture(ref: str, fixtures_dir: str | None = None) -> LoadedFixture:
    path = resolve_fixture_path(ref, fixtures_dir)
    try:
        data = json.loads(path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as e:
        raise BadFixture(f"{path}: invalid JSON ({e})") from e
    try:
        spec = Fixture.model_validate(data)
    except ValidationError as e:
        raise BadFixture(f"{path}: {e.error_count()} schema errors", details=json.loads(e.json())) from e
    loaded = build_fixture(spec, path)
    logger.debug(f"Loaded fixture '{spec.name}' from {path}")
    return loaded


def load_fixtures(fixtures_dir: str) -> dict[str, LoadedFixture]:
    path = Path(fixtures_dir)
    if not path.exists():
        logger.warning(f"Fixtures directory not found: {fixtures_dir}")
        return {}

    fixtures: dict[str, LoadedFixture] = {}
    for file in sorted(path.glob("*.json")):
        try:
            loaded = load_fixture(str(file))
            fixtures[loaded.name] = loaded
            logger.info(f"Loaded fixture '{loaded.name}' from {file.name}")
        except Exception as e:
            logger.error(f"Failed to load fixture file {file}: {e}")

    return fixtures
