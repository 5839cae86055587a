"""Total-progeny (Borel) distribution of a Poisson(mu) branching process.

A cluster started by one point whose members each spawn Poisson(mu)
children has total size distributed Borel(mu).  Its cumulants satisfy a
self-consistency recursion through complete Bell polynomial blocks, which
doubles as an independent exercise of the partition machinery: the first
cumulant is 1/(1-mu) and

    kappa_n = mu/(1-mu) * sum_{k=2..n} B_{n,k}(kappa_1, ..., kappa_{n-k+1}).

Cumulants are cached per (n, mu); plain dict access makes the cache safe
for concurrent readers in CPython, and recomputed entries are identical.
"""

from __future__ import annotations

import math

from .combinatorics import moments_from_cumulants, partial_bell

_cumulant_cache: dict[tuple[int, float], float] = {}


def _check_mu(mu: float) -> None:
    if not 0.0 < mu < 1.0:
        raise ValueError(f"offspring mean mu must lie in (0, 1), got {mu}")


def borel_pmf(n: int, mu: float) -> float:
    """P(total progeny = n) = exp(-mu*n) * (mu*n)^(n-1) / n! for n >= 1."""
    _check_mu(mu)
    if n < 1:
        raise ValueError(f"total progeny is at least 1, got n={n}")
    if n > 50:
        # factorials overflow long before the probability underflows
        return math.exp(-mu * n + (n - 1) * math.log(mu * n) - math.lgamma(n + 1))
    return math.exp(-mu * n) * (mu * n) ** (n - 1) / math.factorial(n)


def borel_cumulant(n: int, mu: float) -> float:
    """n-th cumulant of the total progeny size."""
    _check_mu(mu)
    if n < 1:
        raise ValueError(f"cumulant order must be >= 1, got n={n}")
    key = (n, mu)
    cached = _cumulant_cache.get(key)
    if cached is not None:
        return cached
    if n == 1:
        value = 1.0 / (1.0 - mu)
    else:
        lower = [borel_cumulant(j, mu) for j in range(1, n)]
        value = mu / (1.0 - mu) * math.fsum(
            partial_bell(n, k, lower[: n - k + 1]) for k in range(2, n + 1)
        )
    _cumulant_cache[key] = value
    return value


def borel_moment(n: int, mu: float) -> float:
    """n-th raw moment of the total progeny size; n = 0 gives 1."""
    _check_mu(mu)
    if n < 0:
        raise ValueError(f"moment order must be >= 0, got n={n}")
    return moments_from_cumulants([borel_cumulant(j, mu) for j in range(1, n + 1)])
