"""Command line interface: outputs, file formats, exit codes."""

import csv
import json
import math

import pytest

from hawkesmoments import KernelParams, joint_moment
from hawkesmoments.cli import main

from oracles import first_moment, second_joint_moment

A, B = "0.5", "1.0"


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_moment_matches_library(capsys):
    code, out, _ = run(capsys, "moment", "--a", A, "--b", B, "2.0")
    assert code == 0
    expect = joint_moment([2.0], KernelParams(0.5, 1.0))
    # output carries 12 significant digits
    assert float(out) == pytest.approx(expect, rel=1e-11)


def test_moment_poisson_value(capsys):
    code, out, _ = run(capsys, "moment", "--a", "0", "--b", "1", "1.0", "2.0")
    assert code == 0
    assert float(out) == pytest.approx(3.0, rel=1e-12)


def test_cumulant_consistent_with_moments(capsys):
    _, m2_out, _ = run(capsys, "moment", "--a", A, "--b", B, "2.0", "2.0")
    _, m1_out, _ = run(capsys, "moment", "--a", A, "--b", B, "2.0")
    code, k2_out, _ = run(capsys, "cumulant", "--a", A, "--b", B, "2.0", "2.0")
    assert code == 0
    variance = float(m2_out) - float(m1_out) ** 2
    assert float(k2_out) == pytest.approx(variance, rel=1e-9)


def test_twelve_significant_digits(capsys):
    _, out, _ = run(capsys, "moment", "--a", A, "--b", B, "2.0")
    assert out.strip() == f"{first_moment(0.5, 1.0, 2.0):.12g}"


def test_borel_values(capsys):
    code, out, _ = run(capsys, "borel", "cumulant", "--mu", "0.5", "--n", "2")
    assert code == 0
    assert float(out) == pytest.approx(0.5 / 0.5**3, rel=1e-12)
    code, out, _ = run(capsys, "borel", "pmf", "--mu", "0.5", "--n", "1")
    assert code == 0
    assert float(out) == pytest.approx(math.exp(-0.5), rel=1e-12)
    code, out, _ = run(capsys, "borel", "moment", "--mu", "0.5", "--n", "0")
    assert code == 0
    assert float(out) == 1.0


def test_borel_rejects_bad_mu(capsys):
    code, _, err = run(capsys, "borel", "pmf", "--mu", "1.5", "--n", "1")
    assert code == 2
    assert "error" in err


def test_usage_errors(capsys):
    assert run(capsys, "nonsense")[0] == 2
    assert run(capsys, "moment", "--a", A, "--b", B)[0] == 2
    assert run(capsys, "moment", "--a", A, "--b", B, "-1.0")[0] == 2
    assert run(capsys, "moment", "--a", "-0.5", "--b", B, "1.0")[0] == 2


def test_order_cap_exit_code(capsys):
    argv = ["moment", "--a", A, "--b", B] + ["1.0"] * 9
    assert main(argv) == 3
    capsys.readouterr()


def test_grid_single_axis(tmp_path, capsys):
    out_file = tmp_path / "grid.csv"
    code, _, _ = run(
        capsys, "grid", "--a", A, "--b", B, "--times", "0.5:2.0:4", "--out", str(out_file)
    )
    assert code == 0
    rows = list(csv.reader(out_file.open()))
    assert rows[0] == ["t1", "value"]
    assert len(rows) == 5
    for t_str, v_str in rows[1:]:
        assert float(v_str) == pytest.approx(first_moment(0.5, 1.0, float(t_str)), rel=1e-12)


def test_grid_two_axes_with_fixed_slot(tmp_path, capsys):
    out_file = tmp_path / "grid2.csv"
    code, _, _ = run(
        capsys, "grid", "--a", A, "--b", B, "--times", "0.5:1.5:3,2.0", "--out", str(out_file)
    )
    assert code == 0
    rows = list(csv.reader(out_file.open()))
    assert rows[0] == ["t1", "value"]
    for t_str, v_str in rows[1:]:
        expect = second_joint_moment(0.5, 1.0, float(t_str), 2.0)
        assert float(v_str) == pytest.approx(expect, rel=1e-9)


def test_grid_csv_round_trips_exactly(tmp_path, capsys):
    out_file = tmp_path / "grid3.csv"
    run(capsys, "grid", "--a", A, "--b", B, "--times", "0.5:2.0:3,1.0:2.0:2", "--out", str(out_file))
    rows = list(csv.reader(out_file.open()))
    assert rows[0] == ["t1", "t2", "value"]
    params = KernelParams(0.5, 1.0)
    for t1_str, t2_str, v_str in rows[1:]:
        recomputed = joint_moment([float(t1_str), float(t2_str)], params)
        assert float(v_str) == recomputed


def test_grid_degenerate_all_fixed(capsys):
    code, out, _ = run(capsys, "grid", "--a", A, "--b", B, "--times", "2.0", "--out", "-")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "value"
    assert float(lines[1]) == pytest.approx(first_moment(0.5, 1.0, 2.0), rel=1e-12)


def test_grid_rejects_three_free_axes(capsys):
    code, _, err = run(
        capsys, "grid", "--a", A, "--b", B,
        "--times", "1:2:2,1:2:2,1:2:2", "--out", "-",
    )
    assert code == 2
    assert "error" in err


def test_grid_unwritable_path(capsys):
    code, _, err = run(
        capsys, "grid", "--a", A, "--b", B, "--times", "2.0",
        "--out", "/nonexistent-dir/grid.csv",
    )
    assert code == 4
    assert "error" in err


def test_validate_passes_for_poisson(capsys):
    code, out, _ = run(
        capsys, "validate", "--a", "0", "--b", "1", "--n-paths", "2000",
        "--seed", "5", "--json", "2.0",
    )
    assert code == 0
    record = json.loads(out.strip().splitlines()[-1])
    assert record["analytic"] == pytest.approx(2.0, rel=1e-12)
    assert set(record["estimate"]) == {"value", "std_error", "n_samples", "seed"}
    assert record["estimate"]["n_samples"] == 2000
    assert record["estimate"]["seed"] == 5
    assert abs(record["z"]) <= 4.0


def test_validate_fails_on_override(capsys):
    code, out, _ = run(
        capsys, "validate", "--a", "0", "--b", "1", "--n-paths", "2000",
        "--seed", "5", "--analytic-override", "999.0", "2.0",
    )
    assert code == 1
    assert "z" in out


def test_validate_rejects_tiny_path_counts(capsys):
    code, _, _ = run(
        capsys, "validate", "--a", "0", "--b", "1", "--n-paths", "10", "2.0"
    )
    assert code == 2


def test_bench_reports_term_counts(capsys):
    code, out, _ = run(capsys, "bench", "--a", A, "--b", B, "--max-order", "2")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0].split() == ["order", "kz_terms", "cumulant_ms", "moment_ms"]
    first_row = lines[1].split()
    assert first_row[0] == "1"
    assert first_row[1] == "2"  # two canonical terms when a != b
    assert "not comparable" in lines[-1]
