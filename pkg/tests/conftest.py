import random

import pytest

from subsetcf import PointSet


@pytest.fixture
def rng():
    return random.Random(20240611)


def seeded_points(seed: int, n: int) -> PointSet:
    r = random.Random(seed)
    ys = list(range(1, n + 1))
    r.shuffle(ys)
    return PointSet(tuple((i + 1, ys[i]) for i in range(n)))
