"""Seeded random rational inputs for the randomized checks."""
from __future__ import annotations

import random
from fractions import Fraction

from galspin.exact import ExactScalar


def make_rng(seed: int) -> random.Random:
    return random.Random(seed)


def rational(rng: random.Random, bound: int = 9, max_den: int = 6, positive: bool = False,
             nonzero: bool = False) -> ExactScalar:
    while True:
        num = rng.randint(1 if positive else -bound, bound)
        q = Fraction(num, rng.randint(1, max_den))
        if q or not nonzero:
            return ExactScalar(q)


def vector(rng: random.Random, n: int = 3, **kw) -> list:
    return [rational(rng, **kw) for _ in range(n)]
