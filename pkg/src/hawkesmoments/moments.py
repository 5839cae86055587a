"""Exact joint moments and cumulants of the exponential-kernel process.

Everything reduces to per-ancestor cumulant functions kappa_z: for query
times t_1 <= ... <= t_n, kappa_z(t_1, ..., t_n) is the joint cumulant of
the counts, in each window [0, t_i], of the full progeny of a single point
born at z.  It satisfies

    kappa_z(t) = expected progeny count in [0, t],
    kappa_z(t_1, ..., t_n) = propagator applied to the sum over partitions
        of {1..n} into >= 2 blocks of the product of block kappa_z's,

where the propagator g(z) = a * int_0^{t_1 - z} (.)(z + y) exp((a-b) y) dy
resums all offspring generations.  Joint cumulants of the observed counts
follow by integrating the full partition sum against the immigrant
intensity over [0, t_1], and joint moments are partition sums of joint
cumulants.  Repeated-time queries collapse to Bell polynomials in the
univariate fast path, skipping partition enumeration of large sets.

All partition sums run over the same deterministic enumeration order and
results are invariant under permutation of the query times, which are
sorted on entry.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

from .combinatorics import (
    SizeCapError,
    complete_bell,
    enumerate_set_partitions,
    joint_moment_from_block_cumulants,
    moments_from_cumulants,
    partial_bell,
)
from .exppoly import ExpPoly, ZERO_RATE, integrate_over_domain, shift_integrate
from .params import KernelParams

# Joint queries above this order enumerate too many partitions by default
# (B_8 = 4140 per recursion level); raise explicitly when needed.
DEFAULT_ORDER_CAP = 8

# Below this relative gap the a != b closed forms split near-equal
# exponentials with coefficients ~1/(b-a) that cancel catastrophically in
# higher-order products, so the degenerate branch (exact at a = b, relative
# error O(|a-b| * t) otherwise) is the more accurate one.
NEAR_DEGENERATE_RTOL = 1e-5

Times = tuple[float, ...]


@dataclass
class CumulantCache:
    """Memo tables keyed by sorted query-time tuples.

    Joint and repeated-time entries are kept apart so that each evaluation
    path reproduces bit-identical values on cache hits.  Plain dict access
    keeps reads safe across CPython threads; writers recompute identical
    values, so a lost update costs only time.
    """

    kappa_z: dict[Times, ExpPoly] = field(default_factory=dict)
    kappa: dict[Times, float] = field(default_factory=dict)
    kappa_z_uni: dict[tuple[int, float], ExpPoly] = field(default_factory=dict)
    kappa_uni: dict[tuple[int, float], float] = field(default_factory=dict)


def _sorted_times(times: Sequence[float]) -> Times:
    if len(times) == 0:
        raise ValueError("need at least one query time")
    out = tuple(sorted(float(t) for t in times))
    if not out[0] > 0.0:
        raise ValueError(f"query times must be > 0, got {min(times)}")
    return out


def _check_order(n: int, order_cap: int) -> None:
    if n > order_cap:
        raise SizeCapError(f"query order {n} exceeds the cap {order_cap}")


def kappa_z_first(t: float, params: KernelParams) -> ExpPoly:
    """Expected progeny count in [0, t] of one point at z, as a function of z.

    Equals b/(b-a) + a/(a-b) * exp((a-b)(t-z)) for a != b and 1 + a*(t-z)
    at the degenerate point; both evaluate to 1 at z = t (the point counts
    itself, its offspring all land later).
    """
    if not t > 0.0:
        raise ValueError(f"query time must be > 0, got {t}")
    a, b = params.a, params.b
    if abs(a - b) <= NEAR_DEGENERATE_RTOL * max(a, b):
        return ExpPoly.from_terms([(1.0 + a * t, 0, ZERO_RATE), (-a, 1, ZERO_RATE)], t)
    return ExpPoly.from_terms(
        [(b / (b - a), 0, ZERO_RATE), (a / (a - b) * math.exp((a - b) * t), 0, (-1, 1))], t
    )


def _subtimes(times: Times, block: tuple[int, ...]) -> Times:
    return tuple(times[i - 1] for i in block)


def _kappa_z(times: Times, params: KernelParams, cache: CumulantCache, order_cap: int) -> ExpPoly:
    poly = cache.kappa_z.get(times)
    if poly is not None:
        return poly
    n = len(times)
    _check_order(n, order_cap)
    if n == 1:
        poly = kappa_z_first(times[0], params)
    else:
        acc: ExpPoly | None = None
        for blocks in enumerate_set_partitions(n):
            if len(blocks) < 2:
                continue
            prod = _kappa_z(_subtimes(times, blocks[0]), params, cache, order_cap)
            for block in blocks[1:]:
                prod = prod * _kappa_z(_subtimes(times, block), params, cache, order_cap)
            acc = prod if acc is None else acc + prod
        poly = shift_integrate(acc, times[0], params)
    cache.kappa_z[times] = poly
    return poly


def kappa_z_joint(
    times: Sequence[float],
    params: KernelParams,
    cache: CumulantCache | None = None,
    order_cap: int = DEFAULT_ORDER_CAP,
) -> ExpPoly:
    """Joint cumulant of one ancestor's progeny counts, as a function of the
    ancestor's birth time z on [0, min(times)]."""
    if cache is None:
        cache = CumulantCache()
    return _kappa_z(_sorted_times(times), params, cache, order_cap)


def _joint_cumulant(
    times: Times, params: KernelParams, cache: CumulantCache, order_cap: int
) -> float:
    value = cache.kappa.get(times)
    if value is not None:
        return value
    n = len(times)
    _check_order(n, order_cap)
    acc: ExpPoly | None = None
    for blocks in enumerate_set_partitions(n):
        prod = _kappa_z(_subtimes(times, blocks[0]), params, cache, order_cap)
        for block in blocks[1:]:
            prod = prod * _kappa_z(_subtimes(times, block), params, cache, order_cap)
        acc = prod if acc is None else acc + prod
    value = params.nu * integrate_over_domain(acc, times[0], params)
    cache.kappa[times] = value
    return value


def joint_cumulant(
    times: Sequence[float],
    params: KernelParams,
    cache: CumulantCache | None = None,
    order_cap: int = DEFAULT_ORDER_CAP,
) -> float:
    """Joint cumulant of the counts (X_{t_1}, ..., X_{t_n}).

    Times may repeat; order does not matter.  n = 1 gives E[X_t].
    """
    if cache is None:
        cache = CumulantCache()
    return _joint_cumulant(_sorted_times(times), params, cache, order_cap)


def joint_moment(
    times: Sequence[float],
    params: KernelParams,
    cache: CumulantCache | None = None,
    order_cap: int = DEFAULT_ORDER_CAP,
) -> float:
    """Joint moment E[X_{t_1} * ... * X_{t_n}]; the empty product is 1."""
    if len(times) == 0:
        return 1.0
    tt = _sorted_times(times)
    _check_order(len(tt), order_cap)
    if cache is None:
        cache = CumulantCache()
    return joint_moment_from_block_cumulants(
        len(tt), lambda block: _joint_cumulant(_subtimes(tt, block), params, cache, order_cap)
    )


def _kappa_z_uni(
    n: int, t: float, params: KernelParams, cache: CumulantCache, order_cap: int
) -> ExpPoly:
    poly = cache.kappa_z_uni.get((n, t))
    if poly is not None:
        return poly
    _check_order(n, order_cap)
    if n == 1:
        poly = kappa_z_first(t, params)
    else:
        lower = [_kappa_z_uni(j, t, params, cache, order_cap) for j in range(1, n)]
        acc = partial_bell(n, 2, lower[: n - 1])
        for k in range(3, n + 1):
            acc = acc + partial_bell(n, k, lower[: n - k + 1])
        poly = shift_integrate(acc, t, params)
    cache.kappa_z_uni[(n, t)] = poly
    return poly


def kappa_z_univariate(
    n: int,
    t: float,
    params: KernelParams,
    cache: CumulantCache | None = None,
    order_cap: int = DEFAULT_ORDER_CAP,
) -> ExpPoly:
    """Bell-polynomial fast path for kappa_z at n copies of one time t."""
    if n < 1:
        raise ValueError(f"order must be >= 1, got {n}")
    if not t > 0.0:
        raise ValueError(f"query time must be > 0, got {t}")
    if cache is None:
        cache = CumulantCache()
    return _kappa_z_uni(n, float(t), params, cache, order_cap)


def univariate_cumulant(
    n: int,
    t: float,
    params: KernelParams,
    cache: CumulantCache | None = None,
    order_cap: int = DEFAULT_ORDER_CAP,
) -> float:
    """n-th cumulant of X_t, via the repeated-time fast path."""
    if n < 1:
        raise ValueError(f"order must be >= 1, got {n}")
    if not t > 0.0:
        raise ValueError(f"query time must be > 0, got {t}")
    if cache is None:
        cache = CumulantCache()
    t = float(t)
    value = cache.kappa_uni.get((n, t))
    if value is not None:
        return value
    _check_order(n, order_cap)
    args = [_kappa_z_uni(j, t, params, cache, order_cap) for j in range(1, n + 1)]
    integrand = complete_bell(n, args)
    value = params.nu * integrate_over_domain(integrand, t, params)
    cache.kappa_uni[(n, t)] = value
    return value


def univariate_moment(
    n: int,
    t: float,
    params: KernelParams,
    cache: CumulantCache | None = None,
    order_cap: int = DEFAULT_ORDER_CAP,
) -> float:
    """n-th raw moment E[X_t^n]; n = 0 gives 1."""
    if n < 0:
        raise ValueError(f"order must be >= 0, got {n}")
    if n == 0:
        return 1.0
    _check_order(n, order_cap)
    if cache is None:
        cache = CumulantCache()
    kappas = [univariate_cumulant(j, t, params, cache, order_cap) for j in range(1, n + 1)]
    return moments_from_cumulants(kappas)
