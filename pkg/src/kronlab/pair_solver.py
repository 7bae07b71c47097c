"""Exact solution of the two-frequency approximation problem {a, b}.

For coprime a < b and rational targets (t1, t2) the minimax cost

    mu_{a,b}(t1, t2) = min_x max(<a*x - t1>, <b*x - t2>)

is attained at a "balanced" point where the two residuals are equal in
magnitude and opposite in sign:

    a*x - (t1 + k1) = -(b*x - (t2 + k2)),  x = (t1 + k1 + t2 + k2)/(a + b).

The signed residual equals (a*t2 - b*t1 - m)/(a + b) where m = b*k1 - a*k2
ranges over the integers, so the optimum picks m in {floor(d), floor(d)+1}
with d = a*t2 - b*t1.  The complementary choice of m yields the "second
best" balanced point whose cost is 1/(a+b) - mu.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .exact_arith import bezout_coprime, nearest_int

HALF = Fraction(1, 2)


@dataclass(frozen=True)
class PairProblem:
    """Coprime frequencies a < b with rational targets t1, t2."""

    a: int
    b: int
    t1: Fraction
    t2: Fraction

    def __post_init__(self):
        if not (isinstance(self.a, int) and isinstance(self.b, int)):
            raise ValueError("frequencies must be integers")
        if not (0 < self.a < self.b):
            raise ValueError(f"need 0 < a < b, got a={self.a}, b={self.b}")
        if math.gcd(self.a, self.b) != 1:
            raise ValueError(f"gcd({self.a}, {self.b}) != 1")
        object.__setattr__(self, "t1", Fraction(self.t1))
        object.__setattr__(self, "t2", Fraction(self.t2))


@dataclass(frozen=True)
class BalancedApprox:
    """A balanced solution: a*x-(t1+k1) = -(b*x-(t2+k2)), cost lam = |a*x-(t1+k1)|.

    sign is the sign of the first residual (+1 by convention when lam == 0).
    """

    x: Fraction
    k1: int
    k2: int
    lam: Fraction
    sign: int


def _minimizing_m(p: PairProblem) -> int:
    """Integer m minimizing |a*t2 - b*t1 - m|; ties go to the floor choice."""
    d = p.a * p.t2 - p.b * p.t1
    m0 = math.floor(d)
    return m0 if d - m0 <= HALF else m0 + 1


def mu_pair(p: PairProblem) -> Fraction:
    """Exact pair cost; always in [0, 1/(2(a+b))]."""
    d = p.a * p.t2 - p.b * p.t1
    return abs(d - _minimizing_m(p)) / (p.a + p.b)


def best_pair_approx(p: PairProblem) -> BalancedApprox:
    """Balanced best approximate realizing mu_pair(p).

    (k1, k2) solves b*k1 - a*k2 = m* via the Bezout pair, shifted by the
    homogeneous solution (a*s, b*s) to the representative with smallest
    |k1| (ties to the smaller k1), which keeps x in a small window.
    """
    a, b = p.a, p.b
    m = _minimizing_m(p)
    g, h = bezout_coprime(a, b)
    k1, k2 = -h * m, -g * m
    s = nearest_int(Fraction(-k1, a))
    k1 += a * s
    k2 += b * s
    x = (p.t1 + k1 + p.t2 + k2) / (a + b)
    signed = a * x - (p.t1 + k1)
    return BalancedApprox(x=x, k1=k1, k2=k2, lam=abs(signed),
                          sign=-1 if signed < 0 else 1)


def second_best_approx(p: PairProblem, best: BalancedApprox) -> BalancedApprox:
    """Balanced point with the complementary cost 1/(a+b) - mu_pair(p).

    Obtained from ``best`` by the Bezout shift (k1, k2) -> (k1 - h, k2 - g),
    mirrored when the best point's residual is negative; the shift moves x
    by sign*(g+h)/(a+b) and flips the residual sign.
    """
    a, b = p.a, p.b
    g, h = bezout_coprime(a, b)
    k1 = best.k1 - best.sign * h
    k2 = best.k2 - best.sign * g
    x = (p.t1 + k1 + p.t2 + k2) / (a + b)
    signed = a * x - (p.t1 + k1)
    return BalancedApprox(x=x, k1=k1, k2=k2, lam=abs(signed),
                          sign=-1 if signed < 0 else 1)


def negate_approx(ba: BalancedApprox) -> BalancedApprox:
    """The balanced solution of the negated-target problem.

    If ba solves (t1, t2) then its pointwise negation solves (-t1, -t2)
    with the same cost and opposite sign.
    """
    return BalancedApprox(x=-ba.x, k1=-ba.k1, k2=-ba.k2, lam=ba.lam,
                          sign=1 if ba.lam == 0 else -ba.sign)
