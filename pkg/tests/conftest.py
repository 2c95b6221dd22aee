# =============================================================================
## @file    conftest.py
#  @authors Derek Anderson
#  @date    10.18.2026
# -----------------------------------------------------------------------------
## @brief Shared fixtures of the lab's test suite.
# =============================================================================

import pytest

from RandomSetLab import Streams
from RandomSetLab.Brownian import SeedParams

SEED = 20261018

def pytest_configure(config):
    config.addinivalue_line("markers", "slow: full-size Monte Carlo runs")

@pytest.fixture
def seed():
    return SEED

@pytest.fixture
def make_rng():
    """generator factory keyed by a test-local name"""
    def Make(*keys):
        return Streams.MakeGenerator(SEED, *keys)
    return Make

@pytest.fixture
def rng(request):
    return Streams.MakeGenerator(SEED, request.node.name)

@pytest.fixture
def seed_params():
    return SeedParams(a = 1.0, beta = 1.0)

@pytest.fixture
def small_seed_params():
    """starting point of the E[f_t] = 1 normalization check: the weights f_t
    are heavy tailed for every a > 0, but at a = 0.1 only anchors below about
    a^2 carry large ones and the sample mean settles at test sizes"""
    return SeedParams(a = 0.1, beta = 1.0)

# end =========================================================================
