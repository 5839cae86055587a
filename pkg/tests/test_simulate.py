"""Monte Carlo simulators against analytic values and each other."""

import math

import numpy as np
import pytest

from hawkesmoments import (
    EventSample,
    KernelParams,
    MCConfig,
    SupercriticalError,
    count_at,
    estimate_joint_moment,
    estimate_joint_moments,
    export_path,
    joint_moment,
    path_rng,
    sample_clusters,
    simulate,
    simulate_cluster,
    simulate_thinning,
    write_path_csv,
)

P = KernelParams(0.5, 1.0, 1.0)


def variance_z(x, y):
    """Two-sample z statistic for equality of variances, large-sample form."""
    def var_and_se(v):
        s2 = v.var(ddof=1)
        m4 = ((v - v.mean()) ** 4).mean()
        return s2, math.sqrt(max(m4 - s2 * s2, 0.0) / v.size)

    sx, se_x = var_and_se(x)
    sy, se_y = var_and_se(y)
    return (sx - sy) / math.hypot(se_x, se_y)


def test_paths_are_reproducible():
    for method in ("cluster", "thinning"):
        one = simulate(P, 2.0, path_rng(99, 5), method)
        two = simulate(P, 2.0, path_rng(99, 5), method)
        assert np.array_equal(one.events, two.events)
    different = simulate(P, 2.0, path_rng(99, 6), "cluster")
    assert not np.array_equal(
        simulate(P, 2.0, path_rng(99, 5), "cluster").events, different.events
    )


def test_events_sorted_and_within_horizon():
    for method in ("cluster", "thinning"):
        sample = simulate(P, 3.0, path_rng(1, 0), method)
        assert np.all(np.diff(sample.events) >= 0.0)
        if sample.events.size:
            assert sample.events[0] >= 0.0
            assert sample.events[-1] <= 3.0


def test_supercritical_rejected():
    bad = KernelParams(1.0, 1.0, 1.0)
    with pytest.raises(SupercriticalError):
        simulate_cluster(bad, 1.0, path_rng(0, 0))
    with pytest.raises(SupercriticalError):
        simulate_thinning(bad, 1.0, path_rng(0, 0))
    with pytest.raises(SupercriticalError):
        sample_clusters(bad, 10, path_rng(0, 0))


def test_zero_immigration_thinning_is_empty():
    quiet = KernelParams(0.5, 1.0, 0.0)
    sample = simulate_thinning(quiet, 5.0, path_rng(3, 0))
    assert sample.events.size == 0


def test_poisson_limit_mean():
    flat = KernelParams(0.0, 1.0, 1.0)
    cfg = MCConfig(n_paths=20000, horizon=2.0, seed=11, method="cluster")
    est = estimate_joint_moment(flat, (2.0,), cfg)
    assert abs(est.value - 2.0) <= 4.0 * est.std_error


def test_count_at():
    sample = EventSample(np.array([0.5, 1.5]), 2.0)
    assert list(count_at(sample, [0.25, 1.0, 2.0])) == [0, 1, 2]
    assert list(count_at(sample, 1.5)) == [2]
    with pytest.raises(ValueError):
        count_at(sample, [2.5])


def test_estimates_are_reproducible_and_share_paths():
    cfg = MCConfig(n_paths=2000, horizon=2.0, seed=42, method="cluster")
    first = estimate_joint_moment(P, (1.0, 2.0), cfg)
    second = estimate_joint_moment(P, (1.0, 2.0), cfg)
    assert first == second
    both = estimate_joint_moments(P, [(2.0,), (1.0, 2.0)], cfg)
    assert both[1] == first  # query set does not disturb per-path streams


def test_estimates_match_analytic_moments():
    cfg = MCConfig(n_paths=20000, horizon=2.0, seed=4, method="cluster")
    queries = [(2.0,), (1.0, 2.0), (2.0, 2.0)]
    estimates = estimate_joint_moments(P, queries, cfg)
    for times, est in zip(queries, estimates):
        exact = joint_moment(times, P)
        assert abs(est.value - exact) <= 4.0 * est.std_error


def test_thinning_matches_analytic_mean():
    cfg = MCConfig(n_paths=8000, horizon=2.0, seed=21, method="thinning")
    est = estimate_joint_moment(P, (2.0,), cfg)
    exact = joint_moment((2.0,), P)
    assert abs(est.value - exact) <= 4.0 * est.std_error


def _terminal_counts(method, seed, n):
    return np.array(
        [count_at(simulate(P, 2.0, path_rng(seed, i), method), 2.0)[0] for i in range(n)],
        dtype=float,
    )


def test_cluster_and_thinning_agree():
    n = 15000
    x = _terminal_counts("cluster", 17, n)
    y = _terminal_counts("thinning", 18, n)
    mean_z = (x.mean() - y.mean()) / math.hypot(
        x.std(ddof=1) / math.sqrt(n), y.std(ddof=1) / math.sqrt(n)
    )
    assert abs(mean_z) <= 4.0
    assert abs(variance_z(x, y)) <= 4.0


def test_cluster_statistics_match_borel():
    sample = sample_clusters(P, 30000, path_rng(8, 0))
    mu = P.branching_ratio
    mean_size = sample.sizes.mean()
    se_size = sample.sizes.std(ddof=1) / math.sqrt(sample.sizes.size)
    assert abs(mean_size - 1.0 / (1.0 - mu)) <= 4.0 * se_size
    mean_off = sample.offspring.mean()
    se_off = sample.offspring.std(ddof=1) / math.sqrt(sample.offspring.size)
    assert abs(mean_off - mu) <= 4.0 * se_off
    # every point of every cluster reports an offspring count
    assert sample.offspring.size == sample.sizes.sum()


def test_export_path_columns_and_decay():
    table = export_path(P, 2.0, 0.01, path_rng(31, 0), method="thinning")
    t, x, lam = table[:, 0], table[:, 1], table[:, 2]
    assert table.shape[1] == 3
    assert t[0] == 0.0 and t[-1] == pytest.approx(2.0)
    assert lam[0] == pytest.approx(P.nu)
    assert np.all(np.diff(x) >= 0)
    # between events the excess intensity decays exactly at rate b
    for k in range(len(t) - 1):
        if x[k + 1] == x[k] and lam[k] > P.nu:
            expect = P.nu + (lam[k] - P.nu) * math.exp(-P.b * (t[k + 1] - t[k]))
            assert lam[k + 1] == pytest.approx(expect, rel=1e-9)


def test_export_path_jumps_by_a_at_events():
    rng = path_rng(31, 0)
    sample = simulate(P, 2.0, rng, "thinning")
    assert sample.events.size > 0
    event = float(sample.events[0])
    eps = 1e-7

    def lam_at(time, events):
        past = events[events <= time]
        return P.nu + P.a * np.exp(-P.b * (time - past)).sum()

    jump = lam_at(event, sample.events) - lam_at(event - eps, sample.events)
    assert jump == pytest.approx(P.a, abs=1e-5)


def test_write_path_csv_round_trips(tmp_path):
    table = export_path(P, 1.0, 0.25, path_rng(31, 1))
    target = tmp_path / "path.csv"
    with open(target, "w", newline="") as out:
        write_path_csv(table, out)
    lines = target.read_text().splitlines()
    assert lines[0] == "t,X,lambda"
    assert len(lines) == table.shape[0] + 1
    parsed = np.array([[float(v) for v in line.split(",")] for line in lines[1:]])
    assert np.array_equal(parsed, table)


def test_config_validation():
    with pytest.raises(ValueError):
        MCConfig(n_paths=0, horizon=1.0, seed=0)
    with pytest.raises(ValueError):
        MCConfig(n_paths=10, horizon=0.0, seed=0)
    with pytest.raises(ValueError):
        MCConfig(n_paths=10, horizon=1.0, seed=0, method="exact")
    cfg = MCConfig(n_paths=10, horizon=1.0, seed=0)
    with pytest.raises(ValueError):
        estimate_joint_moment(P, (1.5,), cfg)
    with pytest.raises(ValueError):
        estimate_joint_moment(P, (), cfg)
