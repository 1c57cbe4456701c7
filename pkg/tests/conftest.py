import random

import pytest

from perconj.matrices import IntMatrix


def sign_matrix(rng, n):
    return IntMatrix.from_rows([[rng.choice((-1, 0, 1)) for _ in range(n)] for _ in range(n)])


@pytest.fixture
def rng():
    return random.Random(20240601)
