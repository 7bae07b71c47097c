"""Command-line front end: single queries, congruence sweeps, verification.

Commands
  mu         exact approximation cost of a target vector (oracle), with an
             optional greedy certificate for coprime triples
  constants  closed-form constants and congruence data for one triple
  sweep      one CSV/JSON row per n over a range, optionally oracle-verified
  witness    extremal target triple attaining the closed-form constant
  bench      candidate-count budgets of the oracle on random targets

Exit codes: 0 success, 1 usage/input error, 2 verification mismatch where
the formula claimed validity, 3 internal invariant breach.

Reports are deterministic: identical invocations produce byte-identical
output except for runtime_ms fields (JSON only; never part of CSV).
"""
from __future__ import annotations

import argparse
import json
import math
import os
import random
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from .closed_form import (alpha_formula, alpha_witness, beta_formula,
                          binary_mu, canonical_binary_pair, congruence_data,
                          in_asymptotic_regime, ln_value)
from .exact_arith import (DEFAULT_PRECISION, decimal_approx, parse_rational,
                          rational_to_csv, rational_to_json)
from .greedy_triple import (Certificate, NotInAsymptoticRegime, TripleProblem,
                            greedy_en_certificate)
from .oracle import (SpectrumProblem, alpha_grid_lower_bound, beta_exact,
                     candidate_budget, mu_exact)

CSV_COLUMNS = ("a", "b", "n", "r", "R", "S", "alpha", "beta", "ln", "gap", "verified")

VERIFIED_ORACLE = "oracle-exact"
VERIFIED_WITNESS = "witness-sandwich"
UNVERIFIED = "unverified-small-n"


class VerificationMismatch(Exception):
    """Formula disagreed with the oracle on a triple inside the validated regime."""


class InvariantBreach(Exception):
    """An internal exact invariant failed (certificate below the oracle, ...)."""


@dataclass(frozen=True)
class SweepRow:
    a: int
    b: int
    n: int
    r: int
    R: int
    S: int
    alpha: Fraction
    beta: Fraction
    ln: Fraction
    gap: bool
    verified: str
    runtime_ms: int


def _row_checks(a: int, b: int, n: int) -> bool:
    """Oracle agreement for one triple: case tables, binary constant, witness."""
    t1, t2 = canonical_binary_pair(a, b)
    for t3 in (Fraction(0), Fraction(1, 2)):
        got = mu_exact(SpectrumProblem((a, b, n), (t1, t2, t3))).value
        if got != binary_mu(a, b, n, t3):
            return False
    bval, _ = beta_exact((a, b, n))
    if bval != beta_formula(a, b, n):
        return False
    witness = alpha_witness(a, b, n)
    expected = ln_value(a, b, n) if congruence_data(a, b, n).R == a else alpha_formula(a, b, n)
    return mu_exact(SpectrumProblem((a, b, n), witness)).value == expected


def evaluate_sweep_row(a: int, b: int, n: int, verify: bool) -> SweepRow:
    t0 = time.perf_counter()
    cd = congruence_data(a, b, n)
    alpha = alpha_formula(a, b, n)
    beta = beta_formula(a, b, n)
    verified = UNVERIFIED
    if verify and _row_checks(a, b, n):
        verified = VERIFIED_WITNESS if cd.R == a else VERIFIED_ORACLE
    return SweepRow(a=a, b=b, n=n, r=cd.r, R=cd.R, S=cd.S, alpha=alpha,
                    beta=beta, ln=ln_value(a, b, n), gap=beta < alpha,
                    verified=verified,
                    runtime_ms=int((time.perf_counter() - t0) * 1000))


def _row_worker(args):
    return evaluate_sweep_row(*args)


def row_to_csv(row: SweepRow) -> str:
    return ",".join([
        str(row.a), str(row.b), str(row.n), str(row.r), str(row.R), str(row.S),
        rational_to_csv(row.alpha), rational_to_csv(row.beta),
        rational_to_csv(row.ln), "true" if row.gap else "false", row.verified,
    ])


def row_to_json(row: SweepRow, precision: int) -> dict:
    return {
        "a": row.a, "b": row.b, "n": row.n,
        "r": row.r, "R": row.R, "S": row.S,
        "alpha": rational_to_json(row.alpha, precision),
        "beta": rational_to_json(row.beta, precision),
        "ln": rational_to_json(row.ln, precision),
        "gap": row.gap,
        "verified": row.verified,
        "runtime_ms": row.runtime_ms,
    }


def _emit(text: str, out_path: str | None) -> None:
    """Write the report; file writes are atomic and UTF-8 with LF endings."""
    if out_path is None:
        sys.stdout.write(text)
        return
    tmp = f"{out_path}.tmp.{os.getpid()}"
    try:
        with open(tmp, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
        os.replace(tmp, out_path)
    except OSError:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _fmt(q: Fraction, precision: int) -> str:
    return f"{q.numerator}/{q.denominator} (~{decimal_approx(q, precision)})"


def _parse_spectrum(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError as exc:
        raise ValueError(f"bad spectrum {text!r}: {exc}") from exc


def _parse_targets(text: str) -> tuple[Fraction, ...]:
    return tuple(parse_rational(part) for part in text.split(","))


def cmd_mu(args) -> int:
    spectrum = _parse_spectrum(args.set)
    targets = _parse_targets(args.t)
    problem = SpectrumProblem(spectrum, targets)
    result = mu_exact(problem)
    precision = args.precision

    cert: Certificate | None = None
    regime_note = None
    if args.greedy:
        if len(spectrum) != 3 or math.gcd(spectrum[0], spectrum[1]) != 1:
            raise ValueError("--greedy needs a 3-element spectrum with coprime a, b")
        triple = TripleProblem(*spectrum, *targets)
        try:
            cert = greedy_en_certificate(triple)
        except NotInAsymptoticRegime as exc:
            cert = exc.certificate
            regime_note = str(exc)
        if cert.cost < result.value:
            raise InvariantBreach(
                f"certificate cost {cert.cost} below oracle value {result.value}")

    if args.json:
        doc = {
            "spectrum": list(spectrum),
            "targets": [rational_to_json(t, precision) for t in targets],
            "mu": rational_to_json(result.value, precision),
            "x_star": rational_to_json(result.x_star, precision),
            "k_star": list(result.k_star),
            "candidates_examined": result.candidates_examined,
        }
        if cert is not None:
            doc["certificate"] = {
                "x_star": rational_to_json(cert.x_star, precision),
                "k": list(cert.k),
                "cost": rational_to_json(cert.cost, precision),
                "method": cert.method,
                "negated": cert.negated,
            }
            if regime_note:
                doc["certificate"]["note"] = regime_note
        _emit(json.dumps(doc, indent=2) + "\n", args.out)
    else:
        lines = [
            f"spectrum: {','.join(str(nj) for nj in spectrum)}",
            f"targets: {', '.join(rational_to_csv(t) for t in targets)}",
            f"mu = {_fmt(result.value, precision)}",
            f"x_star = {_fmt(result.x_star, precision)}",
            f"k_star = {list(result.k_star)}",
            f"candidates examined = {result.candidates_examined}",
        ]
        if cert is not None:
            lines.append(f"certificate: x_star = {_fmt(cert.x_star, precision)}, "
                         f"cost = {_fmt(cert.cost, precision)}, method = {cert.method}"
                         + (", negated" if cert.negated else ""))
            if regime_note:
                lines.append(f"note: {regime_note} (bound certificate shown)")
        _emit("\n".join(lines) + "\n", args.out)
    return 0


def cmd_constants(args) -> int:
    a, b, n = args.a, args.b, args.n
    cd = congruence_data(a, b, n)
    alpha = alpha_formula(a, b, n)
    beta = beta_formula(a, b, n)
    ln = ln_value(a, b, n)
    gap = beta < alpha
    regime = in_asymptotic_regime(a, b, n)
    witness = alpha_witness(a, b, n)
    t3_mod1 = witness[2] - math.floor(witness[2])
    expected = ln if cd.R == a else alpha
    precision = args.precision

    verified = None
    if args.verify:
        verified = (VERIFIED_WITNESS if cd.R == a else VERIFIED_ORACLE) \
            if _row_checks(a, b, n) else UNVERIFIED

    grid = None
    if args.grid:
        grid = alpha_grid_lower_bound((a, b, n), args.grid)

    if args.csv:
        row = SweepRow(a=a, b=b, n=n, r=cd.r, R=cd.R, S=cd.S, alpha=alpha,
                       beta=beta, ln=ln, gap=gap,
                       verified=verified if verified is not None else UNVERIFIED,
                       runtime_ms=0)
        _emit(",".join(CSV_COLUMNS) + "\n" + row_to_csv(row) + "\n", args.out)
    elif args.json:
        doc = {
            "a": a, "b": b, "n": n,
            "congruence": {"r": cd.r, "T": cd.T, "R": cd.R, "r2": cd.r2,
                           "S": cd.S, "g": cd.g, "h": cd.h,
                           "parity_case": cd.parity_case},
            "alpha": rational_to_json(alpha, precision),
            "beta": rational_to_json(beta, precision),
            "ln": rational_to_json(ln, precision),
            "gap": gap,
            "in_asymptotic_regime": regime,
            "witness": {
                "t1": rational_to_json(witness[0], precision),
                "t2": rational_to_json(witness[1], precision),
                "t3_raw": rational_to_json(witness[2], precision),
                "t3_mod1": rational_to_json(t3_mod1, precision),
                "expected_mu": rational_to_json(expected, precision),
            },
        }
        if verified is not None:
            doc["verified"] = verified
        if grid is not None:
            doc["grid"] = {"D": args.grid,
                           "value": rational_to_json(grid[0], precision),
                           "argmax": [rational_to_csv(t) for t in grid[1]]}
        _emit(json.dumps(doc, indent=2) + "\n", args.out)
    else:
        lines = [
            f"triple: a={a} b={b} n={n}",
            f"congruences: r={cd.r} T={cd.T} R={cd.R} r2={cd.r2} S={cd.S} "
            f"g={cd.g} h={cd.h} parity={cd.parity_case}",
            f"alpha = {_fmt(alpha, precision)}",
            f"beta  = {_fmt(beta, precision)}",
            f"L_n   = {_fmt(ln, precision)}",
            f"gap (alpha > beta) = {'true' if gap else 'false'}",
            f"asymptotic regime = {'yes' if regime else 'no (small n)'}",
            f"witness: t1={rational_to_csv(witness[0])} t2={rational_to_csv(witness[1])} "
            f"t3={rational_to_csv(witness[2])} (mod 1: {rational_to_csv(t3_mod1)}), "
            f"expected mu = {rational_to_csv(expected)}",
        ]
        if verified is not None:
            lines.append(f"verified: {verified}")
        if grid is not None:
            lines.append(f"grid lower bound (D={args.grid}): {_fmt(grid[0], precision)} "
                         f"at t=({', '.join(rational_to_csv(t) for t in grid[1])})")
        _emit("\n".join(lines) + "\n", args.out)

    if verified == UNVERIFIED and regime:
        raise VerificationMismatch(
            f"formula disagrees with oracle for ({a}, {b}, {n}) inside the regime")
    return 0


def cmd_sweep(args) -> int:
    a, b = args.a, args.b
    if args.n_from > args.n_to:
        raise ValueError(f"--from {args.n_from} exceeds --to {args.n_to}")
    ns = list(range(args.n_from, args.n_to + 1))
    work = [(a, b, n, args.verify) for n in ns]
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            rows = list(pool.map(_row_worker, work, chunksize=1))
    else:
        rows = [evaluate_sweep_row(*w) for w in work]
    rows.sort(key=lambda row: row.n)

    if args.json:
        doc = {"pair": [a, b],
               "rows": [row_to_json(row, args.precision) for row in rows]}
        _emit(json.dumps(doc, indent=2) + "\n", args.out)
    else:
        lines = [",".join(CSV_COLUMNS)] + [row_to_csv(row) for row in rows]
        _emit("\n".join(lines) + "\n", args.out)

    bad = [row for row in rows
           if row.verified == UNVERIFIED and args.verify
           and in_asymptotic_regime(a, b, row.n)]
    if bad:
        raise VerificationMismatch(
            "formula disagrees with oracle inside the regime for n in "
            f"{[row.n for row in bad]}")
    return 0


def cmd_witness(args) -> int:
    a, b, n = args.a, args.b, args.n
    cd = congruence_data(a, b, n)
    witness = alpha_witness(a, b, n)
    t3_mod1 = witness[2] - math.floor(witness[2])
    expected = ln_value(a, b, n) if cd.R == a else alpha_formula(a, b, n)
    precision = args.precision

    oracle_mu = None
    if args.verify:
        oracle_mu = mu_exact(SpectrumProblem((a, b, n), witness)).value

    if args.json:
        doc = {
            "a": a, "b": b, "n": n, "gap_case": cd.R == a,
            "t1": rational_to_json(witness[0], precision),
            "t2": rational_to_json(witness[1], precision),
            "t3_raw": rational_to_json(witness[2], precision),
            "t3_mod1": rational_to_json(t3_mod1, precision),
            "expected_mu": rational_to_json(expected, precision),
        }
        if oracle_mu is not None:
            doc["oracle_mu"] = rational_to_json(oracle_mu, precision)
            doc["verified"] = oracle_mu == expected
        _emit(json.dumps(doc, indent=2) + "\n", args.out)
    else:
        lines = [
            f"triple: a={a} b={b} n={n} ({'R=a gap case' if cd.R == a else 'R!=a'})",
            f"witness: t1={rational_to_csv(witness[0])} t2={rational_to_csv(witness[1])} "
            f"t3={rational_to_csv(witness[2])} (mod 1: {rational_to_csv(t3_mod1)})",
            f"expected mu = {_fmt(expected, precision)}",
        ]
        if oracle_mu is not None:
            lines.append(f"oracle mu = {_fmt(oracle_mu, precision)} "
                         f"({'match' if oracle_mu == expected else 'MISMATCH'})")
        _emit("\n".join(lines) + "\n", args.out)

    if oracle_mu is not None and oracle_mu != expected and in_asymptotic_regime(a, b, n):
        raise VerificationMismatch(
            f"witness cost {oracle_mu} != {expected} for ({a}, {b}, {n}) inside the regime")
    return 0


def cmd_bench(args) -> int:
    spectrum = _parse_spectrum(args.set)
    rng = random.Random(args.seed)
    budget = candidate_budget(spectrum)
    results = []
    for _ in range(args.trials):
        targets = tuple(Fraction(rng.randrange(0, q), q)
                        for q in (rng.randrange(1, 61) for _ in spectrum))
        t0 = time.perf_counter()
        res = mu_exact(SpectrumProblem(spectrum, targets))
        results.append((targets, res, int((time.perf_counter() - t0) * 1000)))
    worst = max(res.candidates_examined for _, res, _ in results)

    if args.json:
        doc = {
            "spectrum": list(spectrum), "trials": args.trials, "seed": args.seed,
            "budget": budget, "max_candidates": worst,
            "results": [{"targets": [rational_to_csv(t) for t in targets],
                         "value": rational_to_csv(res.value),
                         "candidates": res.candidates_examined,
                         "runtime_ms": ms}
                        for targets, res, ms in results],
        }
        _emit(json.dumps(doc, indent=2) + "\n", args.out)
    else:
        lines = [f"spectrum: {','.join(str(nj) for nj in spectrum)}  "
                 f"budget = {budget} candidates"]
        for targets, res, ms in results:
            lines.append(f"t=({', '.join(rational_to_csv(t) for t in targets)}): "
                         f"mu={rational_to_csv(res.value)} "
                         f"candidates={res.candidates_examined} ({ms} ms)")
        lines.append(f"max candidates = {worst} (budget {budget})")
        _emit("\n".join(lines) + "\n", args.out)

    if worst > budget:
        raise InvariantBreach(f"candidate count {worst} exceeds budget {budget}")
    return 0


class _Parser(argparse.ArgumentParser):
    """argparse exits 2 on usage errors; the exit-code contract wants 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _add_common(parser, csv_flag=False):
    parser.add_argument("--json", action="store_true", help="JSON report")
    if csv_flag:
        parser.add_argument("--csv", action="store_true", help="CSV report")
    parser.add_argument("--out", metavar="PATH", help="write report to PATH (atomic)")
    parser.add_argument("--precision", type=int, default=DEFAULT_PRECISION,
                        help="significant digits for decimal approximations")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="kronlab",
                     description="Exact Kronecker constants of three-element "
                                 "integer sets, with oracle verification.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_mu = sub.add_parser("mu", help="exact approximation cost of a target vector")
    p_mu.add_argument("--set", required=True, metavar="N1,N2,...",
                      help="comma-separated frequencies")
    p_mu.add_argument("--t", required=True, metavar="T1,T2,...",
                      help="comma-separated rational targets (p/q, p, or decimal)")
    p_mu.add_argument("--greedy", action="store_true",
                      help="also print a greedy certificate (3-element coprime sets)")
    _add_common(p_mu)
    p_mu.set_defaults(func=cmd_mu)

    p_con = sub.add_parser("constants", help="closed-form constants for one triple")
    p_con.add_argument("a", type=int)
    p_con.add_argument("b", type=int)
    p_con.add_argument("n", type=int)
    p_con.add_argument("--verify", action="store_true",
                       help="check every formula against the oracle")
    p_con.add_argument("--grid", type=int, metavar="D",
                       help="also compute the 1/D-grid lower bound")
    _add_common(p_con, csv_flag=True)
    p_con.set_defaults(func=cmd_constants)

    p_sweep = sub.add_parser("sweep", help="constants for a range of n (CSV by default)")
    p_sweep.add_argument("a", type=int)
    p_sweep.add_argument("b", type=int)
    p_sweep.add_argument("--from", dest="n_from", type=int, required=True)
    p_sweep.add_argument("--to", dest="n_to", type=int, required=True)
    p_sweep.add_argument("--verify", action="store_true",
                         help="oracle-verify every row")
    p_sweep.add_argument("--jobs", type=int,
                         default=int(os.environ.get("KRONLAB_JOBS", "1")),
                         help="worker processes (default $KRONLAB_JOBS or 1)")
    _add_common(p_sweep)
    p_sweep.set_defaults(func=cmd_sweep)

    p_wit = sub.add_parser("witness", help="extremal target attaining the constant")
    p_wit.add_argument("a", type=int)
    p_wit.add_argument("b", type=int)
    p_wit.add_argument("n", type=int)
    p_wit.add_argument("--verify", action="store_true",
                       help="evaluate the witness with the oracle")
    _add_common(p_wit)
    p_wit.set_defaults(func=cmd_witness)

    p_bench = sub.add_parser("bench", help="oracle candidate-count budgets")
    p_bench.add_argument("--set", required=True, metavar="N1,N2,...")
    p_bench.add_argument("--trials", type=int, default=5)
    p_bench.add_argument("--seed", type=int, default=0)
    _add_common(p_bench)
    p_bench.set_defaults(func=cmd_bench)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 1
    try:
        return args.func(args)
    except VerificationMismatch as exc:
        print(f"kronlab: verification mismatch: {exc}", file=sys.stderr)
        return 2
    except InvariantBreach as exc:
        print(f"kronlab: invariant breach: {exc}", file=sys.stderr)
        return 3
    except (ValueError, OSError) as exc:
        print(f"kronlab: error: {exc}", file=sys.stderr)
        return 1


def entry() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    entry()
