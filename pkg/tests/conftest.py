"""Shared random-instance generators (seeded; tests stay deterministic)."""
import math
import random
from fractions import Fraction


def rand_fraction(rng: random.Random, max_den: int = 60) -> Fraction:
    """Uniform-ish rational in [0, 1) with denominator at most max_den."""
    q = rng.randrange(1, max_den + 1)
    return Fraction(rng.randrange(0, q), q)


def rand_coprime_pair(rng: random.Random, hi: int = 30) -> tuple[int, int]:
    while True:
        a = rng.randrange(1, hi)
        b = rng.randrange(a + 1, hi + 2)
        if math.gcd(a, b) == 1:
            return a, b


def rand_triple(rng: random.Random, hi_pair: int = 9, n_lo: int = 60,
                n_hi: int = 400) -> tuple[int, int, int]:
    a, b = rand_coprime_pair(rng, hi_pair)
    n = rng.randrange(max(n_lo, b + 1), n_hi)
    return a, b, n
