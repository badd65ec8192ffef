import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from hopfsl2.algebra import AlgebraParams


@pytest.fixture(scope="session")
def p311():
    """(n, n1) = (3, 1) with beta = (1, 1, 1)."""
    return AlgebraParams(3, 1, beta=(1, 1, 1))


@pytest.fixture(scope="session")
def p_beta3():
    """(3, 1) with beta = (0, 0, 1): the V_r world of the z-relations."""
    return AlgebraParams(3, 1, beta=(0, 0, 1))
