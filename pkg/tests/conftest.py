import random
from fractions import Fraction

import pytest

from cubicforge import Curve


@pytest.fixture
def x1_11() -> Curve:
    """The conductor-11 curve y^2 = x^3 - x/3 + 19/108."""
    return Curve(Fraction(-1, 3), Fraction(19, 108))


@pytest.fixture
def rng() -> random.Random:
    return random.Random(0xC0FFEE)
