import os
from typing import Generator

# Keep tests independent of any local .env or shell configuration
for name in (
    "POTENTIAL_FORMAT",
    "LOG_LEVEL",
    "VERIFY_TRIALS",
    "VERIFY_MAX_STRANDS",
    "VERIFY_MAX_LENGTH",
    "VERIFY_MAX_COLORS",
    "VERIFY_SEED",
    "BATCH_WORKERS",
    "GASSNER_DEBUG_CHECKS",
    "API_MAX_STRANDS",
    "API_MAX_WORD_LENGTH",
    "API_MAX_TRIALS",
    "CORS_ORIGINS",
):
    os.environ.pop(name, None)

import pytest
from fastapi.testclient import TestClient
from hypothesis import settings as hypothesis_settings

from app.main import app
from app.services.braid import ColoredBraid, parse_braid

hypothesis_settings.register_profile("default", deadline=None, max_examples=40)
hypothesis_settings.register_profile("thorough", deadline=None, max_examples=300)
hypothesis_settings.load_profile(os.getenv("HYPOTHESIS_PROFILE", "default"))


@pytest.fixture(scope="function")
def client() -> Generator[TestClient, None, None]:
    """Create a test client for the HTTP surface."""
    yield TestClient(app)


@pytest.fixture
def hopf() -> ColoredBraid:
    """sigma_1^-2 on two colours; its closure is the positive Hopf link."""
    return parse_braid("-1 -1", "1,2")


@pytest.fixture
def chain() -> ColoredBraid:
    """Three-component chain, each component a different colour."""
    return parse_braid("-1 -1 -2 -2", "1,2,3")


@pytest.fixture
def trefoil() -> ColoredBraid:
    return parse_braid("1 1 1", "1,1")


@pytest.fixture
def unknot() -> ColoredBraid:
    return parse_braid("", "1")


@pytest.fixture
def debug_checks(monkeypatch):
    """Turn on the inverse-matrix self check in the Gassner module."""
    monkeypatch.setenv("GASSNER_DEBUG_CHECKS", "true")
