import random

import pytest

from app.core.redis_client import redis_client
from app.services.curve_atlas_service import CurveAtlasService
from app.services.linear_system_service import LinearSystemService
from app.services.pencil_service import PencilService
from app.services.positivity_service import PositivityService
from app.services.seshadri_service import SeshadriService


@pytest.fixture
def rng():
    return random.Random(20240607)


@pytest.fixture
def atlas():
    return CurveAtlasService()


@pytest.fixture
def linear_systems():
    return LinearSystemService()


@pytest.fixture
def pencil():
    return PencilService()


@pytest.fixture
def seshadri():
    return SeshadriService()


@pytest.fixture(scope="session")
def positivity():
    return PositivityService()


@pytest.fixture(autouse=True)
def no_redis():
    """Every test runs against a disconnected cache."""
    redis_client.redis = None
    yield
    redis_client.redis = None
