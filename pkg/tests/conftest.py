import os
import random
from fractions import Fraction
from pathlib import Path

import pytest
from dotenv import load_dotenv

from dca.lattice import DiscreteFunction, IntegerBox, LatticeSet

INSTANCES = Path(__file__).resolve().parent.parent / "instances"


def suite_size(count: int) -> int:
    """Acceptance-size loop count scaled by DCA_SUITE_SCALE (at least one)."""
    load_dotenv()
    scale = float(os.getenv("DCA_SUITE_SCALE", "1"))
    return max(1, int(count * scale))


def lset(*points) -> LatticeSet:
    return LatticeSet.of(points)


def half(n) -> Fraction:
    return Fraction(n, 2)


@pytest.fixture
def rng():
    return random.Random(20240601)


@pytest.fixture
def instances_dir():
    return INSTANCES


@pytest.fixture
def ex31_sum():
    return lset((1, 0), (0, 1), (2, 1), (1, 2))


@pytest.fixture
def ex41_sum():
    return lset((0, 0, 0), (0, 1, 1), (1, 1, 0), (1, 2, 1))


@pytest.fixture
def ex42_sum():
    return lset((0, 0, 1), (1, 1, 0), (1, 0, 1), (2, 1, 0))


@pytest.fixture
def ex43_f():
    s = lset((0, 0, 1), (1, 1, 0))
    return DiscreteFunction.from_callable(IntegerBox.cube(3, 0, 1), lambda x: 0 if x in s else 1)


@pytest.fixture
def ex43_g(ex42_sum):
    box = IntegerBox((0, 0, 0), (2, 1, 1))
    return DiscreteFunction.from_callable(box, lambda x: 0 if x in ex42_sum else 1)


@pytest.fixture
def ex51_s():
    return lset((1, 1, 0, 0), (0, 1, 1, 0), (1, 0, 1, 0), (0, 0, 0, 1))


@pytest.fixture
def ex51_g(ex51_s):
    box = IntegerBox((0, 0, 0, 0), (2, 2, 2, 3))
    return DiscreteFunction.from_callable(box, lambda p: max(p[0] + p[1], p[1] + p[2], p[0] + p[2], p[3]))


@pytest.fixture
def l1_norm():
    return DiscreteFunction.from_callable(IntegerBox.cube(2, -2, 2), lambda x: abs(x[0]) + abs(x[1]))


@pytest.fixture
def l2sq_norm():
    return DiscreteFunction.from_callable(IntegerBox.cube(2, -2, 2), lambda x: x[0] ** 2 + x[1] ** 2)
