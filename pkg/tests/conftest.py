import itertools
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import HealthCheck, settings

from pin2fill.floer import TypeClass, build_rank_one, build_s3, build_y4k1
from pin2fill.graded import Window

settings.register_profile("default", deadline=None, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

H_SWEEP = [Fraction(-2), Fraction(-1), Fraction(-1, 2), Fraction(0), Fraction(1, 2), Fraction(1), Fraction(2)]


def brute_kernel(m) -> set[tuple[int, ...]]:
    """All v with m v = 0 over F2, by enumeration (oracle, small sizes only)."""
    m = np.asarray(m, dtype=np.int64) % 2
    n = m.shape[1]
    return {v for v in itertools.product((0, 1), repeat=n) if not ((m @ np.array(v, dtype=np.int64)) % 2).any()}


def brute_image(m) -> set[tuple[int, ...]]:
    m = np.asarray(m, dtype=np.int64) % 2
    rows, n = m.shape
    out = set()
    for v in itertools.product((0, 1), repeat=n):
        out.add(tuple(int(x) for x in (m @ np.array(v, dtype=np.int64).reshape(n)) % 2) if n else (0,) * rows)
    if n == 0:
        out = {(0,) * rows}
    return out


def rank_one(h, t, below=30, above=2):
    g0 = -2 * Fraction(h)
    return build_rank_one(h, TypeClass(t), Window(g0 - below, g0 + above))


@pytest.fixture(scope="session")
def s3():
    return build_s3(Window(-30, -1))


@pytest.fixture(scope="session")
def type_one():
    return rank_one(0, TypeClass.I)


@pytest.fixture(scope="session")
def type_two():
    return rank_one(0, TypeClass.II)


@pytest.fixture(scope="session")
def y5():
    return build_y4k1(1, Window(-4, 30))
