import numpy as np
import pytest

from taudirac.clifford import DIRAC, WEYL
from taudirac.config import RunConfig
from taudirac.minkowski import sample_momenta

SEED = 20140101


@pytest.fixture
def rng():
    return np.random.default_rng(SEED)


@pytest.fixture
def config():
    return RunConfig()


@pytest.fixture(params=[DIRAC, WEYL], ids=['dirac', 'weyl'])
def gammas(request):
    return request.param


@pytest.fixture
def momenta(rng):
    return sample_momenta(rng, 50)
