"""Monte Carlo simulators for the exponential-kernel process.

Two independent constructions of the same law: the cluster (branching)
form, where Poisson immigrants each found a cascade of offspring displaced
by Exp(b) waiting times, and Ogata thinning of the conditional intensity
nu + a * sum_i exp(-b (t - T_i)).  Each path draws from its own seeded
substream, so estimates are reproducible and independent of scheduling.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass
from typing import TextIO

import numpy as np

from .params import KernelParams

# Points born after horizon + SPAWN_TAIL_RATE / b never spawn: the chance of
# any descendant falling back inside [0, horizon] is below exp(-40).
SPAWN_TAIL_RATE = 40.0

METHODS = ("cluster", "thinning")


class SupercriticalError(ValueError):
    """Simulation requires mean offspring a/b < 1 so clusters terminate."""


@dataclass(frozen=True)
class EventSample:
    """Sorted event times of one path on [0, horizon]."""

    events: np.ndarray
    horizon: float


@dataclass(frozen=True)
class MCConfig:
    n_paths: int
    horizon: float
    seed: int
    method: str = "cluster"

    def __post_init__(self) -> None:
        if self.n_paths < 1:
            raise ValueError(f"n_paths must be >= 1, got {self.n_paths}")
        if not self.horizon > 0.0:
            raise ValueError(f"horizon must be > 0, got {self.horizon}")
        if self.method not in METHODS:
            raise ValueError(f"method must be one of {METHODS}, got {self.method!r}")


@dataclass(frozen=True)
class MomentEstimate:
    value: float
    std_error: float
    n_samples: int


@dataclass(frozen=True)
class ClusterSample:
    """Branching statistics decoupled from event positions.

    sizes: total progeny (root included) of each simulated cluster.
    offspring: direct child counts of every point, all clusters pooled.
    """

    sizes: np.ndarray
    offspring: np.ndarray


def path_rng(seed: int, index: int) -> np.random.Generator:
    """Independent, reproducible substream for one path."""
    return np.random.default_rng(np.random.SeedSequence(seed, spawn_key=(index,)))


def _check_subcritical(params: KernelParams) -> None:
    if not params.is_subcritical:
        raise SupercriticalError(
            f"mean offspring a/b = {params.branching_ratio} >= 1; clusters would not terminate"
        )


def simulate_cluster(params: KernelParams, horizon: float, rng: np.random.Generator) -> EventSample:
    """One path via the branching construction, generation by generation."""
    _check_subcritical(params)
    if not horizon > 0.0:
        raise ValueError(f"horizon must be > 0, got {horizon}")
    spawn_cap = horizon + SPAWN_TAIL_RATE / params.b
    generation = rng.uniform(0.0, horizon, rng.poisson(params.nu * horizon))
    collected = [generation]
    while generation.size:
        parents = generation[generation <= spawn_cap]
        counts = rng.poisson(params.branching_ratio, parents.size)
        total = int(counts.sum())
        if total == 0:
            break
        generation = np.repeat(parents, counts) + rng.exponential(1.0 / params.b, total)
        collected.append(generation)
    events = np.concatenate(collected)
    return EventSample(np.sort(events[events <= horizon]), float(horizon))


def simulate_thinning(params: KernelParams, horizon: float, rng: np.random.Generator) -> EventSample:
    """One path via Ogata thinning of the conditional intensity."""
    _check_subcritical(params)
    if not horizon > 0.0:
        raise ValueError(f"horizon must be > 0, got {horizon}")
    events: list[float] = []
    t = 0.0
    excitation = 0.0  # a * sum exp(-b (t - T_i)) at the current t
    while True:
        bound = params.nu + excitation
        if bound <= 0.0:
            break
        t_next = t + rng.exponential(1.0 / bound)
        if t_next > horizon:
            break
        excitation *= math.exp(-params.b * (t_next - t))
        t = t_next
        if rng.uniform() * bound <= params.nu + excitation:
            events.append(t)
            excitation += params.a
    return EventSample(np.asarray(events, dtype=float), float(horizon))


def simulate(
    params: KernelParams, horizon: float, rng: np.random.Generator, method: str = "cluster"
) -> EventSample:
    if method == "cluster":
        return simulate_cluster(params, horizon, rng)
    if method == "thinning":
        return simulate_thinning(params, horizon, rng)
    raise ValueError(f"method must be one of {METHODS}, got {method!r}")


def count_at(sample: EventSample, times) -> np.ndarray:
    """Counting-process values X_t at the given times (must be <= horizon)."""
    query = np.atleast_1d(np.asarray(times, dtype=float))
    if query.size and query.max() > sample.horizon * (1.0 + 1e-12):
        raise ValueError(f"query time {query.max()} beyond horizon {sample.horizon}")
    return np.searchsorted(sample.events, query, side="right")


def estimate_joint_moments(
    params: KernelParams, times_list, cfg: MCConfig
) -> list[MomentEstimate]:
    """Estimate several joint moments from one common set of paths.

    Sharing paths across queries costs nothing in bias and makes a whole
    validation table reproducible from a single (seed, n_paths) pair.
    """
    queries = [np.sort(np.asarray(ts, dtype=float)) for ts in times_list]
    for query in queries:
        if query.size == 0:
            raise ValueError("need at least one query time")
        if query.max() > cfg.horizon * (1.0 + 1e-12):
            raise ValueError(f"query time {query.max()} beyond horizon {cfg.horizon}")
    products = np.empty((cfg.n_paths, len(queries)))
    for i in range(cfg.n_paths):
        sample = simulate(params, cfg.horizon, path_rng(cfg.seed, i), cfg.method)
        for j, query in enumerate(queries):
            counts = np.searchsorted(sample.events, query, side="right")
            products[i, j] = float(counts.prod())
    out = []
    for j in range(len(queries)):
        column = products[:, j]
        spread = column.std(ddof=1) / math.sqrt(cfg.n_paths) if cfg.n_paths > 1 else 0.0
        out.append(MomentEstimate(float(column.mean()), float(spread), cfg.n_paths))
    return out


def estimate_joint_moment(params: KernelParams, times, cfg: MCConfig) -> MomentEstimate:
    """Monte Carlo estimate of E[X_{t_1} * ... * X_{t_n}] with its standard error."""
    return estimate_joint_moments(params, [times], cfg)[0]


def sample_clusters(params: KernelParams, n_clusters: int, rng: np.random.Generator) -> ClusterSample:
    """Total sizes and per-point offspring counts of independent clusters.

    Positions never enter the branching statistics, so clusters are grown
    breadth-first over all roots at once and never truncated.
    """
    _check_subcritical(params)
    if n_clusters < 1:
        raise ValueError(f"n_clusters must be >= 1, got {n_clusters}")
    sizes = np.ones(n_clusters, dtype=np.int64)
    alive = np.arange(n_clusters)  # cluster id of each point in the current generation
    offspring: list[np.ndarray] = []
    while alive.size:
        counts = rng.poisson(params.branching_ratio, alive.size)
        offspring.append(counts)
        alive = np.repeat(alive, counts)
        if alive.size:
            sizes += np.bincount(alive, minlength=n_clusters)
    return ClusterSample(sizes, np.concatenate(offspring))


def export_path(
    params: KernelParams,
    horizon: float,
    step: float,
    rng: np.random.Generator,
    method: str = "thinning",
) -> np.ndarray:
    """Sampled (t, X_t, lambda_t) table along one simulated path.

    Returns an array of shape (n_grid, 3) on the grid 0, step, 2*step, ...
    capped at the horizon.  lambda_t is the conditional intensity given the
    simulated events, right-continuous at jumps.
    """
    if not step > 0.0:
        raise ValueError(f"step must be > 0, got {step}")
    sample = simulate(params, horizon, rng, method)
    n_grid = int(math.floor(horizon / step + 1e-9))
    grid = np.arange(n_grid + 1) * step
    counts = np.searchsorted(sample.events, grid, side="right")
    intensity = np.array(
        [
            params.nu + params.a * np.exp(-params.b * (t - sample.events[:k])).sum()
            for t, k in zip(grid, counts)
        ]
    )
    return np.column_stack([grid, counts.astype(float), intensity])


def write_path_csv(table: np.ndarray, out: TextIO) -> None:
    """Write an export_path table as CSV with header t,X,lambda."""
    writer = csv.writer(out)
    writer.writerow(["t", "X", "lambda"])
    writer.writerows(table.tolist())
