"""py.test configuration"""

import numpy as np
import pytest

from qoscillator import config
from qoscillator.algebra.exact import PARAMETERS, SeriesRing, gen
from qoscillator.algebra.lie import h4
from qoscillator.data import load as load_data
from qoscillator.quantum.pbw import oscillator_algebra

# Truncation order of the engines used throughout the test-suite
TEST_ORDER = 4


@pytest.fixture(scope="package")
def h4_algebra():
    return h4()


@pytest.fixture(scope="package")
def series():
    return SeriesRing(PARAMETERS, TEST_ORDER)


@pytest.fixture(scope="package")
def deformed():
    return oscillator_algebra(TEST_ORDER)


@pytest.fixture(scope="package")
def classical():
    return oscillator_algebra(TEST_ORDER, deformed=False)


@pytest.fixture
def rng():
    config.seeds.load({"master": 20240}, init=True)
    return np.random.default_rng(config.seeds.numpy)


@pytest.fixture(autouse=True)
def set_namespace(doctest_namespace):
    doctest_namespace["test_data"] = load_data.cached("tests")
    doctest_namespace["gen"] = gen
    doctest_namespace["h4"] = h4
