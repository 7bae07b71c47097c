"""Constructive greedy certificates for triples {a, b, n}.

Strategy: solve the pair problem {a, b} exactly, then repair the third
coordinate.  Writing lam for the balanced pair cost at x:

  * lam <= (b-a)/(2n): snap x to the nearest z with n*z == t3 (mod 1);
    all three residuals stay within (3b-a)/(2n).
  * otherwise: admissible alignment points z form an interval around x
    (a "z-window") whose endpoints depend on a target bound E >= lam;
    nudging x toward z by the balancing displacement delta keeps the
    worst residual at most E.  With E = (n(a+b)lam + ab)/(2ab+an+bn)
    each window has width exactly 1/n, so an alignment point always
    exists and mu(t) <= max(E, (3b-a)/(2n)) unconditionally.
  * to reach the closed-form constant E_n itself, large lam is handled
    by searching the window of the best balanced point together with the
    window of its complementary "second best" point; a congruence
    argument makes the shifted union long enough whenever n is large.

Certificates never trust the construction: the reported cost is the
angular norm recomputed at x_star.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, replace
from fractions import Fraction

from .closed_form import alpha_formula, ln_value
from .exact_arith import angular_norm, nearest_int
from .pair_solver import (BalancedApprox, PairProblem, best_pair_approx,
                          negate_approx, second_best_approx)

HALF = Fraction(1, 2)


class NotApplicableError(ValueError):
    """Dispatch guard: the small-lambda construction needs lam <= (b-a)/(2n)."""


class EmptyWindowError(ValueError):
    """Raised when a z-window is requested with E < lam."""


class WindowViolationError(ValueError):
    """Raised when modify() is handed an alignment point outside its window."""


class NotInAsymptoticRegime(RuntimeError):
    """No alignment point found at E = E_n: n is too small for the
    closed-form constant to be certified by this construction.

    ``certificate`` carries the unconditional greedy_bound certificate as
    a best effort.
    """

    def __init__(self, message, certificate):
        super().__init__(message)
        self.certificate = certificate


@dataclass(frozen=True)
class TripleProblem:
    """Frequencies a < b < n with gcd(a, b) = 1 and rational targets."""

    a: int
    b: int
    n: int
    t1: Fraction
    t2: Fraction
    t3: Fraction

    def __post_init__(self):
        if not all(isinstance(v, int) for v in (self.a, self.b, self.n)):
            raise ValueError("frequencies must be integers")
        if not (0 < self.a < self.b < self.n):
            raise ValueError(f"need 0 < a < b < n, got ({self.a}, {self.b}, {self.n})")
        if math.gcd(self.a, self.b) != 1:
            raise ValueError(f"gcd({self.a}, {self.b}) != 1")
        for name in ("t1", "t2", "t3"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))

    def pair(self) -> PairProblem:
        return PairProblem(self.a, self.b, self.t1, self.t2)

    def spectrum(self) -> tuple[int, int, int]:
        return (self.a, self.b, self.n)

    def targets(self) -> tuple[Fraction, Fraction, Fraction]:
        return (self.t1, self.t2, self.t3)

    def negated(self) -> "TripleProblem":
        return TripleProblem(self.a, self.b, self.n, -self.t1, -self.t2, -self.t3)


@dataclass(frozen=True)
class ZWindow:
    """Admissible alignment interval [lo, hi] around anchor_x.

    case_tag 'positive-sign' is the window for a balanced point whose
    first residual is +lam; 'negative-sign' for -lam.
    """

    lo: Fraction
    hi: Fraction
    case_tag: str
    anchor_x: Fraction
    E: Fraction
    lam: Fraction

    def width(self) -> Fraction:
        return self.hi - self.lo

    def contains(self, z: Fraction) -> bool:
        return self.lo <= z <= self.hi


@dataclass(frozen=True)
class Certificate:
    """A certified approximate: cost is the exact angular norm at x_star.

    k holds the nearest integers to n_j*x_star - t_j.  ``negated`` records
    that the construction internally solved the negated-target problem
    (the returned x_star and k are already mapped back).
    """

    x_star: Fraction
    k: tuple[int, int, int]
    cost: Fraction
    method: str  # 'small-lambda' | 'greedy-window' | 'oracle'
    negated: bool = False


def certificate_at(p: TripleProblem, x_star: Fraction, method: str,
                   negated: bool = False) -> Certificate:
    """Evaluate a candidate point exactly and package it as a Certificate."""
    residuals = [nj * x_star - tj for nj, tj in zip(p.spectrum(), p.targets())]
    k = tuple(nearest_int(r) for r in residuals)
    return Certificate(x_star=x_star, k=k, cost=angular_norm(residuals),
                       method=method, negated=negated)


def small_lambda_certificate(p: TripleProblem, ba: BalancedApprox) -> Certificate:
    """Snap to the nearest alignment point when lam <= (b-a)/(2n).

    x_star = z with n*z = t3 + k3 and |n*z - n*x| <= 1/2, so the third
    residual vanishes and the cost is at most (3b-a)/(2n).
    """
    if 2 * p.n * ba.lam > p.b - p.a:
        raise NotApplicableError(
            f"lam={ba.lam} exceeds (b-a)/(2n)={Fraction(p.b - p.a, 2 * p.n)}")
    k3 = nearest_int(p.n * ba.x - p.t3)
    z = Fraction(p.t3 + k3, p.n)
    return certificate_at(p, z, "small-lambda")


def z_windows(ba: BalancedApprox, E: Fraction, p: TripleProblem) -> tuple[ZWindow, ZWindow]:
    """Both alignment windows for a balanced point at bound E >= lam.

    positive-sign: [x + (n*lam - (b+n)E)/(bn), x + ((a+n)E - n*lam)/(an)]
    negative-sign: [x + (n*lam - (a+n)E)/(an), x + ((b+n)E - n*lam)/(bn)]

    Each width is E*(2ab+an+bn)/(abn) - lam*(a+b)/(ab); both windows always
    contain the anchor.
    """
    E = Fraction(E)
    if E < ba.lam:
        raise EmptyWindowError(f"E={E} < lam={ba.lam}")
    a, b, n = p.a, p.b, p.n
    x, lam = ba.x, ba.lam
    pos = ZWindow(lo=x + (n * lam - (b + n) * E) / (b * n),
                  hi=x + ((a + n) * E - n * lam) / (a * n),
                  case_tag="positive-sign", anchor_x=x, E=E, lam=lam)
    neg = ZWindow(lo=x + (n * lam - (a + n) * E) / (a * n),
                  hi=x + ((b + n) * E - n * lam) / (b * n),
                  case_tag="negative-sign", anchor_x=x, E=E, lam=lam)
    return pos, neg


def modify(ba: BalancedApprox, z: Fraction, p: TripleProblem,
           window: ZWindow | None = None) -> Certificate:
    """Nudge the balanced point toward the alignment point z.

    z must satisfy n*z == t3 (mod 1) and |n*z - n*x| <= 1 (pass the
    admissibility window to have it enforced as well).  If z is within
    lam/n of x, x is kept; otherwise x moves by the displacement that
    balances the third residual against the growing pair residual:

      positive-sign, z <= x:  delta = (|nx-nz| - lam)/(b+n), x_star = x - delta
      positive-sign, z >  x:  delta = (|nx-nz| - lam)/(a+n), x_star = x + delta
      negative-sign, z <= x:  delta = (|nx-nz| - lam)/(a+n), x_star = x - delta
      negative-sign, z >  x:  delta = (|nx-nz| - lam)/(b+n), x_star = x + delta
    """
    a, b, n = p.a, p.b, p.n
    z = Fraction(z)
    if (n * z - p.t3).denominator != 1:
        raise ValueError(f"n*z - t3 = {n * z - p.t3} is not an integer")
    if window is not None and not window.contains(z):
        raise WindowViolationError(f"z={z} outside [{window.lo}, {window.hi}]")
    gap = abs(n * z - n * ba.x)
    if gap > 1:
        raise WindowViolationError(f"|n*z - n*x| = {gap} > 1")
    if gap <= ba.lam:
        return certificate_at(p, ba.x, "greedy-window")
    slow_side = (z > ba.x) if ba.sign > 0 else (z <= ba.x)
    delta = (gap - ba.lam) / ((a + n) if slow_side else (b + n))
    x_star = ba.x + delta if z > ba.x else ba.x - delta
    return certificate_at(p, x_star, "greedy-window")


def _pick_alignment(w: ZWindow, p: TripleProblem, t3: Fraction):
    """Best admissible k3 in the window: minimizes |n*anchor - (t3+k3)|,
    ties to the smaller k3.  Returns None when the window holds no
    alignment point."""
    lo_k = math.ceil(p.n * w.lo - t3)
    hi_k = math.floor(p.n * w.hi - t3)
    if lo_k > hi_k:
        return None
    k3 = nearest_int(p.n * w.anchor_x - t3)
    k3 = min(max(k3, lo_k), hi_k)
    return k3


def greedy_bound(p: TripleProblem) -> Certificate:
    """Unconditional certificate with cost at most

        max((n(a+b)*mu_pair + ab)/(2ab+an+bn), (3b-a)/(2n)).

    Total for every valid triple: at this E the window width is exactly
    1/n, so an alignment point always exists.
    """
    a, b, n = p.a, p.b, p.n
    ba = best_pair_approx(p.pair())
    if 2 * n * ba.lam <= b - a:
        return small_lambda_certificate(p, ba)
    E = (n * (a + b) * ba.lam + a * b) / Fraction(2 * a * b + a * n + b * n)
    pos, neg = z_windows(ba, E, p)
    w = pos if ba.sign > 0 else neg
    k3 = _pick_alignment(w, p, p.t3)
    assert k3 is not None, "window of width 1/n must contain an alignment point"
    return modify(ba, Fraction(p.t3 + k3, n), p, window=w)


def greedy_en_certificate(p: TripleProblem) -> Certificate:
    """Certificate with cost at most the closed-form constant E_n.

    Normalizes the sign of the best balanced point (replacing t by -t if
    needed; the cost is negation-invariant), then dispatches:

      lam <= (b-a)/(2n)        -> small-lambda snap, cost <= (3b-a)/(2n)
      lam <= 1/(a+b) - L_n     -> positive window at E = L_n (width >= 1/n)
      otherwise                -> positive window of the best point and
                                  negative window of the second-best point,
                                  both at E = E_n

    Raises NotInAsymptoticRegime (with a greedy_bound fallback attached)
    when no alignment point exists in the final case; for n in the
    asymptotic regime that cannot happen, for any residue class R.
    """
    a, b, n = p.a, p.b, p.n
    q = p
    negated = False
    ba = best_pair_approx(q.pair())
    if ba.sign < 0:
        q = p.negated()
        ba = negate_approx(ba)
        negated = True
    en = alpha_formula(a, b, n)
    ln = ln_value(a, b, n)

    if 2 * n * ba.lam <= b - a:
        cert = small_lambda_certificate(q, ba)
    elif ba.lam <= Fraction(1, a + b) - ln:
        w = z_windows(ba, ln, q)[0]
        k3 = _pick_alignment(w, q, q.t3)
        assert k3 is not None, "L_n window has width >= 1/n here"
        cert = modify(ba, Fraction(q.t3 + k3, n), q, window=w)
    else:
        try:
            w_best = z_windows(ba, en, q)[0]
            sb = second_best_approx(q.pair(), ba)
            w_second = z_windows(sb, en, q)[1]
        except EmptyWindowError as exc:
            raise NotInAsymptoticRegime(str(exc), greedy_bound(p)) from exc
        picks = []
        for w, anchor_ba in ((w_best, ba), (w_second, sb)):
            k3 = _pick_alignment(w, q, q.t3)
            if k3 is not None:
                picks.append((abs(n * w.anchor_x - (q.t3 + k3)), k3, w, anchor_ba))
        if not picks:
            raise NotInAsymptoticRegime(
                f"no alignment point at E_n={en} for ({a}, {b}, {n})",
                greedy_bound(p))
        picks.sort(key=lambda item: (item[0], item[1], item[2].case_tag))
        _, k3, w, anchor_ba = picks[0]
        cert = modify(anchor_ba, Fraction(q.t3 + k3, n), q, window=w)

    if negated:
        cert = Certificate(x_star=-cert.x_star, k=tuple(-kj for kj in cert.k),
                           cost=cert.cost, method=cert.method, negated=True)
    return cert
