import math
import random

import pytest
from hypothesis import given, strategies as st

from maxtree.majorization import log_objective, log_sum_check, majorizes, weakly_supermajorizes
from maxtree.shape import caterpillar, fully_symmetric, leaf


def test_majorizes_examples():
    assert majorizes((3, 2, 1), (2, 2, 2))
    assert not majorizes((2, 2, 2), (3, 2, 1))
    assert majorizes((1, 3, 2), (3, 2, 1)) and majorizes((3, 2, 1), (1, 3, 2))


def test_weak_supermajorization_examples():
    assert weakly_supermajorizes((2, 2, 4), (2, 3, 4))
    assert weakly_supermajorizes((2, 3, 4), (2, 3, 4))
    assert not weakly_supermajorizes((2, 3, 4), (2, 2, 4))


def test_length_mismatch():
    with pytest.raises(ValueError):
        majorizes((1, 2), (3,))
    with pytest.raises(ValueError):
        weakly_supermajorizes((1, 2), (3,))


def test_log_objective():
    assert log_objective(caterpillar(2, 3))[0] == 6
    assert log_objective(fully_symmetric(2, 2))[0] == 3
    p, lg = log_objective(leaf(2))
    assert p == 1 and lg == 0.0
    p, lg = log_objective(caterpillar(3, 4))
    assert math.isclose(lg, math.log(p))


def test_log_sum_examples():
    assert log_sum_check((2, 3, 4), (2, 2, 4)) is True
    assert log_sum_check((4, 2, 3), (2, 3, 4)) is None
    assert log_sum_check((2, 2, 4), (2, 3, 4)) is None
    with pytest.raises(ValueError):
        log_sum_check((0, 1), (1, 1))


def spread(rng: random.Random, y: list[int]) -> list[int]:
    """Raise some entries of y; every prefix sum can only grow, so x dominates."""
    x = list(y)
    for i in rng.sample(range(len(x)), rng.randint(1, len(x))):
        x[i] += rng.randint(1, 5)
    return x


def test_log_sum_randomized():
    rng = random.Random(2024)
    for _ in range(2000):
        y = [rng.randint(1, 20) for _ in range(rng.randint(1, 8))]
        x = spread(rng, y)
        xs, ys = sorted(x), sorted(y)
        assert all(sum(ys[: k + 1]) <= sum(xs[: k + 1]) for k in range(len(x)))
        assert weakly_supermajorizes(y, x)
        assert log_sum_check(x, y) is True


vectors = st.lists(st.integers(1, 9), min_size=1, max_size=6)


@given(vectors)
def test_reflexive(v):
    assert majorizes(v, v) and weakly_supermajorizes(v, v)


@given(st.integers(1, 6).flatmap(lambda k: st.tuples(*[st.lists(st.integers(1, 9), min_size=k, max_size=k)] * 3)))
def test_transitive(vs):
    a, b, c = vs
    if weakly_supermajorizes(a, b) and weakly_supermajorizes(b, c):
        assert weakly_supermajorizes(a, c)
    if majorizes(a, b) and majorizes(b, c):
        assert majorizes(a, c)


@given(st.integers(1, 5).flatmap(lambda k: st.tuples(*[st.lists(st.integers(1, 9), min_size=k, max_size=k)] * 2)))
def test_log_sum_never_false(pair):
    x, y = pair
    assert log_sum_check(x, y) in (True, None)
