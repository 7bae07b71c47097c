"""Exact rational substrate for the whole package.

Every cost, coordinate and constant in kronlab is a `fractions.Fraction`.
This module supplies the distance-to-nearest-integer operator, the angular
max-norm built on it, Bezout coefficients for coprime pairs, and the
serialization helpers used by reports.  Decimal rendering exists for display
only and is never used in a comparison.
"""
from __future__ import annotations

import math
from decimal import Decimal, ROUND_HALF_EVEN, localcontext
from fractions import Fraction
from typing import Iterable, Sequence

#: Exact rational number: canonical reduced form, positive denominator,
#: value-based equality/ordering/hashing.  Immutable, hence safe to share
#: across worker processes without synchronization.
Rational = Fraction

DEFAULT_PRECISION = 12


class NonCoprimeError(ValueError):
    """Raised when a Bezout pair is requested for non-coprime inputs."""


def nearest_int(u: Fraction) -> int:
    """Integer nearest to ``u``; exact half-integers round down.

    The downward tie rule keeps every construction in the package
    deterministic (certificates, oracle k-vectors, window picks).
    """
    f = math.floor(u)
    return f if u - f <= Fraction(1, 2) else f + 1


def nearest_int_distance(u: Fraction) -> Fraction:
    """Distance from ``u`` to the nearest integer, in [0, 1/2].

    Periodic with period 1 and even: the same value is returned for
    ``u``, ``-u`` and ``u + k`` for any integer ``k``.
    """
    u = Fraction(u)
    r = u - math.floor(u)
    return min(r, 1 - r)


def angular_norm(v: Sequence[Fraction] | Iterable[Fraction]) -> Fraction:
    """Max over components of the nearest-integer distance.

    Raises ValueError on an empty vector.
    """
    items = [nearest_int_distance(c) for c in v]
    if not items:
        raise ValueError("angular_norm of an empty vector")
    return max(items)


def bezout_coprime(a: int, b: int) -> tuple[int, int]:
    """Canonical (g, h) with a*g - b*h = 1 for coprime positive a, b.

    g is the least positive integer with a*g == 1 (mod b); for b == 1 the
    degenerate pair (1, a-1) is returned so the identity still holds.
    """
    if a < 1 or b < 1:
        raise ValueError(f"bezout_coprime needs positive integers, got ({a}, {b})")
    if math.gcd(a, b) != 1:
        raise NonCoprimeError(f"gcd({a}, {b}) != 1")
    if b == 1:
        return 1, a - 1
    g = pow(a, -1, b)
    h = (a * g - 1) // b
    return g, h


def parse_rational(text: str) -> Fraction:
    """Parse "p/q", "p", or a decimal string into an exact Fraction."""
    return Fraction(text.strip())


def decimal_approx(q: Fraction, precision: int = DEFAULT_PRECISION) -> str:
    """Decimal rendering at ``precision`` significant digits, half-even.

    Display only; callers must never compare these strings numerically.
    """
    with localcontext() as ctx:
        ctx.prec = precision
        ctx.rounding = ROUND_HALF_EVEN
        return str(Decimal(q.numerator) / Decimal(q.denominator))


def rational_to_json(q: Fraction, precision: int = DEFAULT_PRECISION) -> dict:
    return {
        "num": str(q.numerator),
        "den": str(q.denominator),
        "approx": decimal_approx(q, precision),
    }


def rational_from_json(obj) -> Fraction:
    """Inverse of rational_to_json; also accepts plain string forms."""
    if isinstance(obj, str):
        return parse_rational(obj)
    return Fraction(int(obj["num"]), int(obj["den"]))


def rational_to_csv(q: Fraction) -> str:
    """CSV cell form "num/den" (always includes the denominator)."""
    return f"{q.numerator}/{q.denominator}"
