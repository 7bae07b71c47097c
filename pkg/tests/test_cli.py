import json
from fractions import Fraction

import kronlab.cli as cli
from kronlab.cli import (CSV_COLUMNS, UNVERIFIED, VERIFIED_ORACLE,
                         VERIFIED_WITNESS, evaluate_sweep_row, main)
from kronlab.exact_arith import parse_rational


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_mu_command_examples(capsys):
    code, out, _ = run(capsys, "mu", "--set", "1,2,100", "--t", "0,1/2,1/2")
    assert code == 0
    assert "mu = 1/6" in out

    code, out, _ = run(capsys, "mu", "--set", "7", "--t", "3/5")
    assert code == 0
    assert "mu = 0/1" in out

    code, out, _ = run(capsys, "mu", "--set", "2,3", "--t", "1/2,0")
    assert code == 0
    assert "mu = 1/10" in out


def test_mu_greedy_certificate(capsys):
    code, out, _ = run(capsys, "mu", "--set", "1,2,100", "--t", "0,1/2,1/2",
                       "--greedy", "--json")
    assert code == 0
    doc = json.loads(out)
    cert_cost = Fraction(int(doc["certificate"]["cost"]["num"]),
                         int(doc["certificate"]["cost"]["den"]))
    oracle = Fraction(int(doc["mu"]["num"]), int(doc["mu"]["den"]))
    assert oracle == Fraction(1, 6) <= cert_cost


def test_mu_greedy_needs_triple(capsys):
    code, _, err = run(capsys, "mu", "--set", "1,2", "--t", "0,1/2", "--greedy")
    assert code == 1 and "greedy" in err


def test_constants_verified_gap_case(capsys):
    code, out, _ = run(capsys, "constants", "1", "2", "100", "--verify")
    assert code == 0
    assert "alpha = 51/302" in out
    assert "beta  = 17/101" in out
    assert "gap (alpha > beta) = true" in out
    assert f"verified: {VERIFIED_WITNESS}" in out


def test_constants_verified_equal_case(capsys):
    code, out, _ = run(capsys, "constants", "2", "3", "300", "--verify")
    assert code == 0
    assert "alpha = 31/302" in out and "beta  = 31/302" in out
    assert "gap (alpha > beta) = false" in out
    assert f"verified: {VERIFIED_ORACLE}" in out


def test_constants_plain_and_json(capsys):
    code, out, _ = run(capsys, "constants", "1", "2", "99")
    assert code == 0
    assert "alpha = 17/100" in out and "verified:" not in out

    code, out, _ = run(capsys, "constants", "1", "2", "99", "--json")
    doc = json.loads(out)
    assert doc["alpha"] == {"num": "17", "den": "100", "approx": "0.17"}
    assert doc["gap"] is False
    assert doc["congruence"]["R"] == 0


def test_constants_grid(capsys):
    code, out, _ = run(capsys, "constants", "1", "2", "12", "--grid", "4")
    assert code == 0
    assert "grid lower bound (D=4)" in out


def test_constants_usage_errors(capsys):
    code, _, err = run(capsys, "constants", "2", "4", "100")
    assert code == 1 and "gcd" in err
    code, _, _ = run(capsys, "constants", "2", "4")
    assert code == 1
    code, _, _ = run(capsys, "nosuchcommand")
    assert code == 1


def test_exit_code_2_on_in_regime_mismatch(capsys, monkeypatch):
    monkeypatch.setattr(cli, "_row_checks", lambda a, b, n: False)
    code, out, _ = run(capsys, "constants", "1", "2", "100", "--verify")
    assert code == 2
    assert f"verified: {UNVERIFIED}" in out


def test_exit_code_3_on_budget_breach(capsys, monkeypatch):
    monkeypatch.setattr(cli, "candidate_budget", lambda spectrum: 0)
    code, _, err = run(capsys, "bench", "--set", "1,2,30", "--trials", "1")
    assert code == 3 and "invariant breach" in err


def test_sweep_csv_file(tmp_path, capsys):
    out_path = tmp_path / "rows.csv"
    code, _, _ = run(capsys, "sweep", "1", "2", "--from", "96", "--to", "104",
                     "--verify", "--out", str(out_path))
    assert code == 0
    lines = out_path.read_text().splitlines()
    assert lines[0] == ",".join(CSV_COLUMNS)
    assert len(lines) == 10  # header + 9 rows
    rows = [line.split(",") for line in lines[1:]]
    assert [int(r[2]) for r in rows] == list(range(96, 105))
    assert [int(r[4]) for r in rows] == [0, 1, 2] * 3  # R cycles with period a+b
    assert all(r[10] in (VERIFIED_ORACLE, VERIFIED_WITNESS) for r in rows)
    # round-trip: rational cells parse back exactly
    for r in rows:
        alpha = parse_rational(r[6])
        beta = parse_rational(r[7])
        assert (r[9] == "true") == (beta < alpha)


def test_sweep_determinism_and_jobs(tmp_path, capsys):
    p1, p2 = tmp_path / "a.csv", tmp_path / "b.csv"
    assert run(capsys, "sweep", "2", "3", "--from", "300", "--to", "309",
               "--out", str(p1))[0] == 0
    assert run(capsys, "sweep", "2", "3", "--from", "300", "--to", "309",
               "--jobs", "2", "--out", str(p2))[0] == 0
    assert p1.read_bytes() == p2.read_bytes()


def test_sweep_json_rows(capsys):
    code, out, _ = run(capsys, "sweep", "1", "2", "--from", "99", "--to", "101",
                       "--json")
    assert code == 0
    doc = json.loads(out)
    assert [row["n"] for row in doc["rows"]] == [99, 100, 101]
    for row in doc["rows"]:
        assert set(row) == {"a", "b", "n", "r", "R", "S", "alpha", "beta", "ln",
                            "gap", "verified", "runtime_ms"}
        assert row["verified"] == UNVERIFIED  # no --verify requested
        # JSON rationals round-trip bit-identically (runtime_ms excluded)
        recomputed = evaluate_sweep_row(1, 2, row["n"], verify=False)
        for field in ("alpha", "beta", "ln"):
            assert Fraction(int(row[field]["num"]), int(row[field]["den"])) == \
                getattr(recomputed, field)


def test_precision_flag(capsys):
    code, out, _ = run(capsys, "mu", "--set", "1,2", "--t", "0,1/2",
                       "--precision", "4", "--json")
    assert code == 0
    assert json.loads(out)["mu"]["approx"] == "0.1667"


def test_sweep_env_jobs_default(tmp_path, capsys, monkeypatch):
    monkeypatch.setenv("KRONLAB_JOBS", "2")
    out_path = tmp_path / "env.csv"
    code, _, _ = run(capsys, "sweep", "1", "2", "--from", "50", "--to", "53",
                     "--out", str(out_path))
    assert code == 0 and out_path.exists()


def test_sweep_bad_range_and_io_failure(tmp_path, capsys):
    code, _, err = run(capsys, "sweep", "1", "2", "--from", "10", "--to", "5")
    assert code == 1 and "exceeds" in err
    missing = tmp_path / "nodir" / "rows.csv"
    code, _, _ = run(capsys, "sweep", "1", "2", "--from", "96", "--to", "97",
                     "--out", str(missing))
    assert code == 1
    assert not missing.exists()
    assert not any(p.name.startswith("rows.csv.tmp") for p in tmp_path.iterdir())


def test_evaluate_sweep_row_fields():
    row = evaluate_sweep_row(1, 2, 100, verify=False)
    assert (row.r, row.R, row.S) == (1, 1, 4)
    assert row.gap and row.verified == UNVERIFIED
    assert row.alpha == Fraction(51, 302) and row.beta == Fraction(17, 101)

    row = evaluate_sweep_row(1, 2, 100, verify=True)
    assert row.verified == VERIFIED_WITNESS

    row = evaluate_sweep_row(2, 3, 300, verify=True)
    assert row.verified == VERIFIED_ORACLE and not row.gap


def test_witness_command(capsys):
    code, out, _ = run(capsys, "witness", "1", "2", "100", "--verify")
    assert code == 0
    assert "t2=149/302" in out and "t3=5151/302" in out
    assert "mod 1: 17/302" in out
    assert "oracle mu = 51/302" in out and "(match)" in out


def test_bench_command(capsys):
    code, out, _ = run(capsys, "bench", "--set", "1,2,100", "--trials", "3",
                       "--seed", "7")
    assert code == 0
    assert "budget" in out

    code, out, _ = run(capsys, "bench", "--set", "2,3,60", "--trials", "2",
                       "--json")
    doc = json.loads(out)
    assert doc["max_candidates"] <= doc["budget"]


def test_atomic_out_writes(tmp_path, capsys):
    out_path = tmp_path / "mu.txt"
    code, _, _ = run(capsys, "mu", "--set", "2,3", "--t", "1/2,0",
                     "--out", str(out_path))
    assert code == 0
    assert "mu = 1/10" in out_path.read_text()
    assert not any(p.name.startswith("mu.txt.tmp") for p in tmp_path.iterdir())


def test_malformed_targets(capsys):
    code, _, err = run(capsys, "mu", "--set", "2,3", "--t", "x,y")
    assert code == 1 and "error" in err
    code, _, _ = run(capsys, "mu", "--set", "2,x", "--t", "0,0")
    assert code == 1
