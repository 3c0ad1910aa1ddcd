# tests/conftest.py

"""Shared fixtures: small named graphs and the counterexample instances."""

import pytest
from structlog.contextvars import clear_contextvars

from config.settings import reset_settings
from src.constructions import build_complete, build_counterexample, build_cycle
from src.core.graph import Graph
from src.models.inputs import CounterexampleParams


@pytest.fixture(autouse=True)
def fresh_settings():
    """Every test sees settings re-read from its own environment."""
    reset_settings()
    yield
    reset_settings()
    clear_contextvars()


@pytest.fixture
def k4() -> Graph:
    return build_complete(4)


@pytest.fixture
def c6() -> Graph:
    return build_cycle(6)


@pytest.fixture
def ce_2_8():
    """Counterexample d=2, n=8 and its role labels."""
    return build_counterexample(CounterexampleParams(d=2, n=8))


@pytest.fixture
def ce_3_15():
    return build_counterexample(CounterexampleParams(d=3, n=15))


@pytest.fixture
def ce_4_24():
    return build_counterexample(CounterexampleParams(d=4, n=24))


@pytest.fixture
def disconnected() -> Graph:
    return Graph(4, [(0, 1), (2, 3)])
