import numpy as np
import pytest

from cvrpkit import ArraySpec, ElementModel, isotropic, synthesize_eirp
from cvrpkit.grid import AngularGrid


@pytest.fixture(scope="session")
def std_grid():
    return AngularGrid.standard()


@pytest.fixture(scope="session")
def iso_pattern(std_grid):
    return isotropic(1.0, std_grid)


@pytest.fixture(scope="session")
def cosine_boresight():
    spec = ArraySpec(element=ElementModel.COSINE)
    return synthesize_eirp(spec, 1.0)


@pytest.fixture(scope="session")
def huygens_boresight():
    spec = ArraySpec(element=ElementModel.HUYGENS)
    return synthesize_eirp(spec, 1.0)


@pytest.fixture
def rng():
    return np.random.default_rng(20240911)
