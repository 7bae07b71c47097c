"""Independent brute-force ground truth for approximation costs.

mu_exact minimizes F(x) = max_j <n_j*x - t_j> over x in [0, 1) by exact
enumeration of a finite candidate set that provably contains a minimizer:
F is piecewise linear with nonzero slopes, so every local minimum sits
either at a zero of some component (a valley) or at a crossing of two
components with opposite slopes (a balanced point).  Candidates:

  * balanced crossings  x = (t_i + t_j + s)/(n_i + n_j), i < j, s integer;
  * valleys             x = (t_j + k)/n_j;
  * peaks               x = (t_j + k + 1/2)/n_j  (belt and braces: they
    bound every monotone piece, so the scan stays correct even if the
    envelope analysis were upset by degenerate spectra).

Everything is exact Fraction arithmetic; no tolerance anywhere.  This
module deliberately shares no code with the closed forms or the greedy
construction it is used to check (only the trivial binary toggle is
reused, as a work-halving device whose validity is itself under test).
"""
from __future__ import annotations

import itertools
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .closed_form import toggle_reduce
from .exact_arith import nearest_int, nearest_int_distance

HALF = Fraction(1, 2)


class SpectrumTooLargeError(ValueError):
    """beta_exact refuses spectra beyond its 2^d enumeration cap."""


@dataclass(frozen=True)
class SpectrumProblem:
    """A strictly increasing tuple of positive frequencies plus rational targets."""

    spectrum: tuple[int, ...]
    targets: tuple[Fraction, ...]

    def __post_init__(self):
        spectrum = tuple(int(nj) for nj in self.spectrum)
        targets = tuple(Fraction(t) for t in self.targets)
        if len(spectrum) < 1:
            raise ValueError("spectrum must be non-empty")
        if len(spectrum) != len(targets):
            raise ValueError("spectrum and targets lengths differ")
        if spectrum[0] < 1 or any(x >= y for x, y in zip(spectrum, spectrum[1:])):
            raise ValueError(f"spectrum must be strictly increasing positive: {spectrum}")
        object.__setattr__(self, "spectrum", spectrum)
        object.__setattr__(self, "targets", targets)


@dataclass(frozen=True)
class OracleResult:
    value: Fraction
    x_star: Fraction
    k_star: tuple[int, ...]
    candidates_examined: int


def _span(total: Fraction, offset: Fraction):
    """Integers s with (offset + s)/total in [0, 1), i.e. s in [-offset, total-offset)."""
    return range(math.ceil(-offset), math.ceil(total - offset))


def _candidates(p: SpectrumProblem) -> list[Fraction]:
    spectrum, targets = p.spectrum, p.targets
    cands: set[Fraction] = set()
    for i, j in itertools.combinations(range(len(spectrum)), 2):
        total = spectrum[i] + spectrum[j]
        off = targets[i] + targets[j]
        for s in _span(total, off):
            cands.add(Fraction(off + s, total))
    for nj, tj in zip(spectrum, targets):
        for off in (tj, tj + HALF):
            for k in _span(nj, off):
                cands.add(Fraction(off + k, nj))
    return sorted(cands)


def mu_exact(p: SpectrumProblem) -> OracleResult:
    """Exact minimum of x -> max_j <n_j*x - t_j> over x in [0, 1).

    Ties broken toward the smallest x_star, then the lexicographically
    smallest k_star (nearest integers, halves rounding down).
    """
    cands = _candidates(p)
    # Largest frequency first: it moves fastest, so partial maxima exceed
    # the incumbent early and most candidates are rejected after one term.
    order = sorted(range(len(p.spectrum)), key=lambda i: -p.spectrum[i])
    spectrum, targets = p.spectrum, p.targets
    best_val = None
    best_x = None
    for x in cands:
        worst = Fraction(0)
        for i in order:
            d = nearest_int_distance(spectrum[i] * x - targets[i])
            if d > worst:
                worst = d
                if best_val is not None and worst >= best_val:
                    break
        else:
            if best_val is None or worst < best_val:
                best_val, best_x = worst, x
    k_star = tuple(nearest_int(nj * best_x - tj) for nj, tj in zip(spectrum, targets))
    return OracleResult(value=best_val, x_star=best_x, k_star=k_star,
                        candidates_examined=len(cands))


def candidate_budget(spectrum: Sequence[int]) -> int:
    """Documented ceiling on candidates_examined: d^2 * (max pair sum + 2)."""
    d = len(spectrum)
    if d == 1:
        return 2 * (spectrum[0] + 2)
    max_pair = spectrum[-1] + spectrum[-2]
    return d * d * (max_pair + 2)


def _binary_targets(spectrum, use_toggle):
    """Binary targets to evaluate, lexicographic; non-canonical members of
    each toggling pair are skipped when use_toggle is set."""
    d = len(spectrum)
    for bits in itertools.product((Fraction(0), HALF), repeat=d):
        if use_toggle and toggle_reduce(spectrum, bits) < bits:
            continue
        yield bits


def _mu_value_at(args):
    spectrum, t = args
    return t, mu_exact(SpectrumProblem(spectrum, t)).value


def _reduce_max(pairs):
    """Order-independent max; ties keep the lexicographically smallest target."""
    best_t, best_v = None, None
    for t, v in pairs:
        if best_v is None or v > best_v or (v == best_v and t < best_t):
            best_t, best_v = t, v
    return best_v, best_t


def beta_exact(spectrum: Sequence[int], cap: int = 12, use_toggle: bool = True,
               jobs: int = 1) -> tuple[Fraction, tuple[Fraction, ...]]:
    """Exhaustive binary Kronecker constant: max of mu_exact over {0, 1/2}^d.

    Toggling halves the enumeration by evaluating one representative per
    cost-equivalence class.  Independent targets may be distributed over
    ``jobs`` worker processes; the reduction is order-independent.
    """
    spectrum = tuple(int(nj) for nj in spectrum)
    if len(spectrum) > cap:
        raise SpectrumTooLargeError(
            f"|S| = {len(spectrum)} exceeds the cap of {cap}")
    work = [(spectrum, t) for t in _binary_targets(spectrum, use_toggle)]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_mu_value_at, work, chunksize=8))
    else:
        results = [_mu_value_at(w) for w in work]
    return _reduce_max(results)


def alpha_grid_lower_bound(spectrum: Sequence[int], D: int, jobs: int = 1
                           ) -> tuple[Fraction, tuple[Fraction, ...]]:
    """Lower bound on the angular constant from a 1/D target grid.

    Translation invariance (mu is unchanged by t -> t + c*spectrum) pins
    t_1 = 0, so only D^(d-1) grid targets are scanned.  The result is a
    certified lower bound, monotone under grid refinement D -> k*D; it is
    not claimed to attain the constant.
    """
    spectrum = tuple(int(nj) for nj in spectrum)
    if D < 2:
        raise ValueError(f"grid resolution must be >= 2, got {D}")
    steps = [Fraction(i, D) for i in range(D)]
    work = [(spectrum, (Fraction(0),) + rest)
            for rest in itertools.product(steps, repeat=len(spectrum) - 1)]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_mu_value_at, work, chunksize=8))
    else:
        results = [_mu_value_at(w) for w in work]
    return _reduce_max(results)
