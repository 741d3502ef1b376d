"""Parameter points used by the verification suites."""

from __future__ import annotations

import random
from fractions import Fraction

GENERIC = (Fraction(13, 7), Fraction(5, 3))


def random_point(rng: random.Random) -> tuple:
    """A rational (delta, delta') with large denominators; never integral, never 0."""
    while True:
        d = Fraction(rng.randint(-999, 999), rng.randint(101, 997))
        dp = Fraction(rng.randint(-999, 999), rng.randint(101, 997))
        if d.denominator > 1 and dp.denominator > 1:
            return d, dp


def random_points(seed: int, count: int) -> list:
    rng = random.Random(seed)
    return [random_point(rng) for _ in range(count)]


def generic_points(seed: int = 0, extra: int = 2) -> list:
    return [GENERIC] + random_points(seed, extra)
