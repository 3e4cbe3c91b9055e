"""Pytest configuration and shared fixtures for braidmono testing."""

import asyncio
from collections.abc import AsyncGenerator
from pathlib import Path

import pytest

from braidmono.cache.sqlite import SqliteBraidCache
from braidmono.curves import load_fixture
from braidmono.exactpoly import BivariatePoly
from braidmono.models import PipelineConfig, Report
from braidmono.parsers import parse_curve
from braidmono.pipeline import run_pipeline


@pytest.fixture
async def braid_cache(tmp_path: Path) -> AsyncGenerator[SqliteBraidCache, None]:
    """Provide a temporary SQLite braid cache, closed after the test."""
    cache = SqliteBraidCache(tmp_path / "braids.db")
    yield cache
    await cache.close()


@pytest.fixture(scope="session")
def curve_c() -> BivariatePoly:
    """The sextic C with a cyclic fundamental group."""
    return load_fixture("C")


@pytest.fixture(scope="session")
def curve_cprime() -> BivariatePoly:
    """The sextic C' whose fundamental group has order 30."""
    return load_fixture("Cprime")


@pytest.fixture(scope="session")
def curve_quartic() -> BivariatePoly:
    """A quartic with two vertical alignments of all four fiber roots."""
    return load_fixture("quartic")


@pytest.fixture(scope="session")
def conic() -> BivariatePoly:
    return parse_curve("x^2 + y^2 - 1")


@pytest.fixture(scope="session")
def cubic() -> BivariatePoly:
    return load_fixture("cubic")


def _run_fixture(name: str, **options: object) -> Report:
    cfg = PipelineConfig(fixture=name, use_cache=False, alexander=True, **options)
    return asyncio.run(run_pipeline(cfg))


@pytest.fixture(scope="session")
def report_c() -> Report:
    """Full pipeline report for C (computed once per session)."""
    return _run_fixture("C", certify_segments=True, check_local_braids=True)


@pytest.fixture(scope="session")
def report_cprime() -> Report:
    """Full pipeline report for C' (computed once per session)."""
    return _run_fixture("Cprime", check_redundancy=True, check_local_braids=True)
