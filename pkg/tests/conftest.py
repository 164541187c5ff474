import numpy as np
import pytest

from trustcons import load_roundabout


@pytest.fixture(scope="session")
def roundabout():
    return load_roundabout()


@pytest.fixture
def rng():
    return np.random.default_rng(20240917)
