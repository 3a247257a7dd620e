import random

import pytest

from bchmin.gf2m import default_field


@pytest.fixture
def gf16():
    return default_field(4)


@pytest.fixture
def gf256():
    return default_field(8)


def rng(seed: int = 1234) -> random.Random:
    return random.Random(seed)


def random_nonzero(ctx, r: random.Random) -> int:
    while True:
        x = r.getrandbits(ctx.m)
        if x:
            return x
