from .loader import LoadedFixture, build_fixture, load_fixture, load_fixtures, resolve_fixture_path

__all__ = ["LoadedFixture", "build_fixture", "load_fixture", "load_fixtures", "resolve_fixture_path"]
