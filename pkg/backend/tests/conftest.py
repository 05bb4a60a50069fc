"""
Global test configuration and fixtures.
"""

import itertools
import os

import pytest
from hypothesis import settings

# Keep OpenTelemetry disabled for tests to avoid interference
os.environ["OTEL_SDK_DISABLED"] = "true"
os.environ["TESTING"] = "true"

# Builds and DP passes vary a lot in run time between examples
settings.register_profile("bipolar", deadline=None)
settings.load_profile("bipolar")


def all_walks(max_length):
    """Every walk with at most max_length steps, shortest first."""
    from src.models.walk import Walk

    for n in range(max_length + 1):
        for letters in itertools.product("abc", repeat=n):
            yield Walk.from_tags("".join(letters))


@pytest.fixture(scope="session")
def short_walks():
    """All 1 + 3 + ... + 3^5 walks of length at most 5."""
    return list(all_walks(5))


@pytest.fixture
def walk_factory():
    """Build a walk from its a/b/c tags."""
    from src.models.walk import Walk

    return Walk.from_tags


@pytest.fixture
def map_factory():
    """Build the KMSW map of a tag string."""
    from src.kmsw.builder import build
    from src.models.walk import Walk

    def factory(tags):
        return build(Walk.from_tags(tags))

    return factory


@pytest.fixture
def sample_walk(walk_factory):
    """A mixed walk that visits all four boundary segments."""
    return walk_factory("acabbcaacb")
