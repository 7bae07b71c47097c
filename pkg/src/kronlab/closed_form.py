"""Closed-form Kronecker constants for triples {a, b, n} with gcd(a,b) = 1.

The angular constant alpha(a,b,n) depends on the residue class of n mod
(a+b) through R = r*T mod (a+b), where a*T == 1 (mod a+b) and n == r.
Four cases arise, with R = a (equivalently n == a^2 mod (a+b)) the special
one where alpha exceeds the binary constant beta.  The binary constant is
governed by S = (g+h)*n mod (2a+2b) for a parity-specific Bezout pair
(g, h), via two three/four-row case tables (one per value of the third
binary target).

All formulas are exact rational expressions, valid for n large; for small
n they still evaluate but must be checked against the oracle (see
``in_asymptotic_regime`` and the sweep verification flags).
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Sequence

HALF = Fraction(1, 2)


def _validate_triple(a: int, b: int, n: int) -> None:
    if not (isinstance(a, int) and isinstance(b, int) and isinstance(n, int)):
        raise ValueError("triple entries must be integers")
    if not (0 < a < b < n):
        raise ValueError(f"need 0 < a < b < n, got ({a}, {b}, {n})")
    if math.gcd(a, b) != 1:
        raise ValueError(f"gcd({a}, {b}) != 1")


@dataclass(frozen=True)
class CongruenceData:
    """Residues steering the case analysis for a triple (a, b, n).

    r, T, R live mod (a+b):  a*T == 1, n == r, R == r*T.
    r2, S live mod (2a+2b):  n == r2, S == (g+h)*r2, where (g, h) is the
    parity-specific pair below (a*g - b*h = 1 in either case):

      b odd:  2a*G - b*H = 1 with least positive G;  g = 2G, h = H (H odd).
      b even: a*G - 2b*H = 1 with least positive G;  g = G (odd), h = 2H.
    """

    r: int
    T: int
    R: int
    r2: int
    S: int
    g: int
    h: int
    parity_case: str  # 'b-odd' | 'b-even'


def congruence_data(a: int, b: int, n: int) -> CongruenceData:
    _validate_triple(a, b, n)
    m = a + b
    T = pow(a, -1, m)
    r = n % m
    R = (r * T) % m
    r2 = n % (2 * m)
    if b % 2 == 1:
        G = pow(2 * a, -1, b)
        H = (2 * a * G - 1) // b
        g, h = 2 * G, H
        parity = "b-odd"
    else:
        G = pow(a, -1, 2 * b)
        H = (a * G - 1) // (2 * b)
        g, h = G, 2 * H
        parity = "b-even"
    assert a * g - b * h == 1
    S = ((g + h) * r2) % (2 * m)
    return CongruenceData(r=r, T=T, R=R, r2=r2, S=S, g=g, h=h, parity_case=parity)


def alpha_formula(a: int, b: int, n: int) -> Fraction:
    """Four-case closed form for the angular Kronecker constant, keyed on R."""
    R = congruence_data(a, b, n).R
    if R < a:
        return Fraction(n + a * a + a * b - a * R, 2 * (a + b) * (a + n))
    if R == a:
        return Fraction(n + a * b, 2 * (a * n + b * n + a * b))
    if R <= 2 * a:
        return Fraction(n + b * R, 2 * (a + b) * (b + n))
    return Fraction(n + 2 * a * a + 2 * a * b - a * R, 2 * (a + b) * (a + n))


def ln_value(a: int, b: int, n: int) -> Fraction:
    """(n+ab) / (2(an+bn+ab)); equals alpha_formula exactly when R = a.

    Always exceeds the pair constant 1/(2(a+b)) and, for n in the
    asymptotic regime, never exceeds alpha_formula.
    """
    _validate_triple(a, b, n)
    return Fraction(n + a * b, 2 * (a * n + b * n + a * b))


def canonical_binary_pair(a: int, b: int) -> tuple[Fraction, Fraction]:
    """The binary pair target all others toggle to: (1/2,0) for b odd, (0,1/2) for b even."""
    return (HALF, Fraction(0)) if b % 2 == 1 else (Fraction(0), HALF)


class BinaryCase(NamedTuple):
    value: Fraction
    case: str


def binary_mu_detail(a: int, b: int, n: int, t3: Fraction) -> BinaryCase:
    """Case-table value of mu at (canonical pair, t3), with the row label.

    The label names the balanced structure of the optimum: type-1 is the
    pure pair crossing at cost 1/(2(a+b)); type-2 balances the first and
    third residuals; type-3 balances the second and third.
    """
    cd = congruence_data(a, b, n)
    S, m = cd.S, a + b
    t3 = Fraction(t3)
    if t3 == 0:
        if S in (0, 1, 2 * m - 1):
            return BinaryCase(Fraction(1, 2 * m), "t3=0 type-1 (S in {0, 1, 2a+2b-1})")
        if 2 <= S <= 2 * a:
            return BinaryCase(Fraction(n + b * S, 2 * m * (b + n)),
                              "t3=0 type-3 (2 <= S <= 2a)")
        return BinaryCase(Fraction(n + 2 * a * a + 2 * a * b - a * S, 2 * m * (a + n)),
                          "t3=0 type-2 (2a < S <= 2a+2b-2)")
    if t3 == HALF:
        if S in (m - 1, m, m + 1):
            return BinaryCase(Fraction(1, 2 * m), "t3=1/2 type-1 (S in {a+b-1, a+b, a+b+1})")
        if S < m - 1:
            return BinaryCase(Fraction(n + a * a + a * b - a * S, 2 * m * (a + n)),
                              "t3=1/2 type-2 (0 <= S < a+b-1)")
        if S <= 3 * a + b:
            return BinaryCase(Fraction(n - a * b - b * b + b * S, 2 * m * (b + n)),
                              "t3=1/2 type-3 (a+b+1 < S <= 3a+b)")
        return BinaryCase(Fraction(n + 3 * a * a + 3 * a * b - a * S, 2 * m * (a + n)),
                          "t3=1/2 type-2 (3a+b < S < 2a+2b)")
    raise ValueError(f"t3 must be 0 or 1/2, got {t3}")


def binary_mu(a: int, b: int, n: int, t3: Fraction) -> Fraction:
    return binary_mu_detail(a, b, n, t3).value


def beta_formula(a: int, b: int, n: int) -> Fraction:
    """Binary Kronecker constant: alpha_formula unless R = a, where it drops
    to (n+ab)/(2(a+b)(a+n))."""
    cd = congruence_data(a, b, n)
    if cd.R == a:
        return Fraction(n + a * b, 2 * (a + b) * (a + n))
    return alpha_formula(a, b, n)


def toggle_reduce(spectrum: Sequence[int], t: Sequence[Fraction]) -> tuple[Fraction, ...]:
    """Cost-preserving flip of binary targets: entries at odd frequencies
    are replaced by 1/2 - entry; even frequencies keep theirs."""
    t = tuple(Fraction(v) for v in t)
    if len(spectrum) != len(t):
        raise ValueError("spectrum and target lengths differ")
    for v in t:
        if v not in (0, HALF):
            raise ValueError(f"binary target entries must be 0 or 1/2, got {v}")
    return tuple(v if nj % 2 == 0 else HALF - v for nj, v in zip(spectrum, t))


def alpha_witness(a: int, b: int, n: int) -> tuple[Fraction, Fraction, Fraction]:
    """Rational target triple whose cost attains the closed-form constant.

    R = a: the analytic witness t1 = 0, t2 = ((a+b)/a)(1/(a+b) - L_n),
    t3 = n*z2 where z2 is the upper window endpoint; its cost is L_n.
    The raw t3 may exceed 1; reduce mod 1 freely, the cost is periodic.

    R != a: the canonical binary pair plus the t3 in {0, 1/2} maximizing
    the case table; its cost is alpha_formula (= beta_formula here).
    """
    cd = congruence_data(a, b, n)
    if cd.R == a:
        ln = ln_value(a, b, n)
        t2 = Fraction(a + b, a) * (Fraction(1, a + b) - ln)
        t3 = Fraction((a + n) * (n + a * b), 2 * a * (a * n + b * n + a * b))
        return Fraction(0), t2, t3
    t1, t2 = canonical_binary_pair(a, b)
    v0 = binary_mu(a, b, n, Fraction(0))
    vh = binary_mu(a, b, n, HALF)
    return t1, t2, (Fraction(0) if v0 >= vh else HALF)


def in_asymptotic_regime(a: int, b: int, n: int) -> bool:
    """Sufficient conditions under which the greedy construction is known
    to certify alpha_formula:

      (3b-a)/(2n) <= E_n,   1/(a+b) - L_n > (b-a)/(2n),   E_n < 1/(a+b).

    A False result does not mean the formulas are wrong for this triple,
    only that they are not backed by the construction; the oracle is the
    arbiter there.
    """
    _validate_triple(a, b, n)
    en = alpha_formula(a, b, n)
    ln = ln_value(a, b, n)
    return (
        Fraction(3 * b - a, 2 * n) <= en
        and Fraction(1, a + b) - ln > Fraction(b - a, 2 * n)
        and en < Fraction(1, a + b)
    )
