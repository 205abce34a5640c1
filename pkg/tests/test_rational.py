"""Exact rational layer: construction, formatting, rounding helpers."""

import math
import random

import pytest

from artgallery.rational import fmt, isqrt_floor, numden, rat, rationalize, sqrt_rat_down


def test_rat_from_string():
    assert rat("3/7") == rat(3, 7)
    assert rat("1.25") == rat(5, 4)
    assert rat("-2/4") == rat(-1, 2)


def test_rat_from_float_is_exact_binary_value():
    # 0.5 and 0.25 are exact in binary, 0.1 is not.
    assert rat(0.5) == rat(1, 2)
    assert rat(0.25) == rat(1, 4)
    assert rat(0.1) != rat(1, 10)
    assert float(rat(0.1)) == 0.1


def test_rat_rejects_non_finite():
    with pytest.raises(ValueError):
        rat(float("nan"))
    with pytest.raises((ValueError, OverflowError)):
        rat(float("inf"))


def test_fmt_round_trips():
    for s in ("3/7", "2", "-1/2", "0", "123456789/987654321"):
        assert rat(fmt(rat(s))) == rat(s)


def test_numden():
    assert numden(rat("3/7")) == (3, 7)
    assert numden(rat(2)) == (2, 1)


def test_rationalize_recovers_simple_fractions():
    assert rationalize(1.0 / 3.0) == rat(1, 3)
    assert rationalize(math.pi, 1000) == rat(355, 113)


def test_isqrt_floor():
    assert isqrt_floor(0) == 0
    assert isqrt_floor(15) == 3
    assert isqrt_floor(16) == 4
    assert isqrt_floor(17) == 4
    n = 10**40 + 12345
    r = isqrt_floor(n)
    assert r * r <= n < (r + 1) * (r + 1)


def test_sqrt_rat_down_is_lower_bound():
    """sqrt_rat_down(q)**2 <= q, and the gap is small."""
    rng = random.Random(7)
    for _ in range(50):
        q = rat(rng.randrange(1, 10**6), rng.randrange(1, 10**3))
        s = sqrt_rat_down(q)
        assert s * s <= q
        assert float(q) - float(s) ** 2 < 1e-8 * max(1.0, float(q))


def test_exact_arithmetic_no_drift():
    # Summing 1/3 three hundred times stays exactly 100.
    acc = rat(0)
    for _ in range(300):
        acc += rat(1, 3)
    assert acc == rat(100)
