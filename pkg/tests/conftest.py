import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))

from toepfact import generate_matrix


@pytest.fixture
def rng():
    return np.random.default_rng(20240901)


def seeded_generic(n, seed):
    return generate_matrix(n, seed, "generic")
