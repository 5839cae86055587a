"""Closed-form algebra on exponential polynomials sum_i c_i * z^p_i * exp(rho_i * z).

Rates rho are stored as exact integer pairs (m_a, m_b) meaning
m_a * a + m_b * b, so degenerate rates are recognised structurally rather
than by floating-point accident.  The class is closed under addition,
multiplication, the offspring propagator

    g(z) = a * int_0^{T-z} f(z + y) * exp((a - b) * y) dy,

and definite integration over [0, T]: substituting w = z + y and expanding
(z + y)^p and (T - z)^j binomially keeps every result a finite combination
of the same term shape.

The kernel integral int_0^U y^q exp(mu*y) dy is taken three ways.  For
mu = 0 it is U^(q+1)/(q+1).  For small |mu|*T it is summed as the series
sum_r mu^r U^(q+1+r) / (r! (q+1+r)), which stays polynomial in U and is
well conditioned where the closed form loses all precision to cancellation
between terms of size q!/mu^(q+1).  Otherwise the closed form

    exp(mu*U) * sum_{i=0..q} (-1)^i q!/(q-i)! U^(q-i) / mu^(i+1)
      + (-1)^(q+1) q! / mu^(q+1)

is used; its exp(mu*U) factor splits into the constant exp(mu*T) and a rate
contribution -mu on z, so the image still lives in the class.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple

from .params import KernelParams

RateExpr = tuple[int, int]

ZERO_RATE: RateExpr = (0, 0)

# Terms below this fraction of the largest coefficient are dropped when a
# polynomial is canonicalised.
COEFF_DROP_TOL = 1e-14

# A rate whose value is below this fraction of max(a, b) is treated as zero
# even when its integer pair is not (0, 0); that covers a == b bit-equal.
RATE_ZERO_RTOL = 1e-12

# |mu| * T at or below this uses the series form of the kernel integral.
SERIES_SWITCH = 0.5

# Series terms are added until the next one falls below this bound.
SERIES_TERM_BOUND = 1e-18
SERIES_MAX_TERMS = 40

# Relative slack on domain-membership checks, absorbing roundoff in callers.
DOMAIN_SLACK = 1e-9


class ExpPolyTerm(NamedTuple):
    coeff: float
    power: int
    rate: RateExpr


def rate_value(rate: RateExpr, params: KernelParams) -> float:
    """Numeric value m_a * a + m_b * b of a rate pair."""
    return rate[0] * params.a + rate[1] * params.b


def rate_is_zero(rate: RateExpr, params: KernelParams) -> bool:
    """True when a rate is structurally (0, 0) or numerically degenerate."""
    if rate == ZERO_RATE:
        return True
    return abs(rate_value(rate, params)) <= RATE_ZERO_RTOL * max(params.a, params.b)


def _canonical(items: Iterable[tuple[float, int, RateExpr]]) -> tuple[ExpPolyTerm, ...]:
    acc: dict[tuple[int, RateExpr], float] = {}
    for coeff, power, rate in items:
        if power < 0:
            raise ValueError(f"term power must be >= 0, got {power}")
        key = (power, rate)
        acc[key] = acc.get(key, 0.0) + coeff
    if not acc:
        return ()
    floor = COEFF_DROP_TOL * max(abs(c) for c in acc.values())
    kept = [ExpPolyTerm(c, p, r) for (p, r), c in acc.items() if abs(c) > floor]
    kept.sort(key=lambda term: (term.power, term.rate))
    return tuple(kept)


@dataclass(frozen=True)
class ExpPoly:
    """Canonical sum of coeff * z^power * exp(rate * z) on the domain [0, domain_end].

    Instances are immutable; all operations return new polynomials.  Terms
    are unique per (power, rate), sorted, and free of negligible
    coefficients, so structural equality of canonical forms is meaningful.
    """

    terms: tuple[ExpPolyTerm, ...]
    domain_end: float

    @staticmethod
    def from_terms(items: Iterable[tuple[float, int, RateExpr]], domain_end: float) -> ExpPoly:
        if not domain_end > 0.0:
            raise ValueError(f"domain_end must be > 0, got {domain_end}")
        return ExpPoly(_canonical(items), float(domain_end))

    @staticmethod
    def zero(domain_end: float) -> ExpPoly:
        return ExpPoly.from_terms((), domain_end)

    @staticmethod
    def constant(value: float, domain_end: float) -> ExpPoly:
        return ExpPoly.from_terms([(value, 0, ZERO_RATE)], domain_end)

    @property
    def term_count(self) -> int:
        return len(self.terms)

    def eval(self, z: float, params: KernelParams) -> float:
        """Value at z; z must lie in [0, domain_end] up to roundoff slack."""
        slack = DOMAIN_SLACK * max(1.0, self.domain_end)
        if z < -slack or z > self.domain_end + slack:
            raise ValueError(f"z={z} outside domain [0, {self.domain_end}]")
        return math.fsum(
            c * z**p * math.exp(rate_value(r, params) * z) for c, p, r in self.terms
        )

    def __add__(self, other: ExpPoly) -> ExpPoly:
        if not isinstance(other, ExpPoly):
            return NotImplemented
        end = min(self.domain_end, other.domain_end)
        return ExpPoly.from_terms(list(self.terms) + list(other.terms), end)

    def __mul__(self, other: ExpPoly | float) -> ExpPoly:
        if isinstance(other, ExpPoly):
            end = min(self.domain_end, other.domain_end)
            items = [
                (c1 * c2, p1 + p2, (r1[0] + r2[0], r1[1] + r2[1]))
                for c1, p1, r1 in self.terms
                for c2, p2, r2 in other.terms
            ]
            return ExpPoly.from_terms(items, end)
        if isinstance(other, (int, float)):
            return self.scale(float(other))
        return NotImplemented

    __rmul__ = __mul__

    def __neg__(self) -> ExpPoly:
        return self.scale(-1.0)

    def __sub__(self, other: ExpPoly) -> ExpPoly:
        if not isinstance(other, ExpPoly):
            return NotImplemented
        return self + (-other)

    def scale(self, factor: float) -> ExpPoly:
        return ExpPoly(
            _canonical((factor * c, p, r) for c, p, r in self.terms), self.domain_end
        )

    def debug_lines(self) -> list[str]:
        """One text line per canonical term, for golden-file comparisons."""
        return [
            f"{c!r} * z^{p} * exp(({r[0]}*a + {r[1]}*b)*z)" for c, p, r in self.terms
        ]


def _series_length(x: float) -> int:
    """Terms needed for sum_r x^r / r! to converge below SERIES_TERM_BOUND."""
    r = 0
    term = 1.0
    while term > SERIES_TERM_BOUND and r < SERIES_MAX_TERMS:
        r += 1
        term *= x / r
    return r


def _expand_in_z(
    pieces: Iterable[tuple[float, int]], t_upper: float, zpow: int, rate: RateExpr
) -> Iterator[tuple[float, int, RateExpr]]:
    """Expand sum_k c_k * (T - z)^k times z^zpow into plain z-terms at one rate."""
    for c, k in pieces:
        for s in range(k + 1):
            yield (c * math.comb(k, s) * t_upper ** (k - s) * (-1.0) ** s, zpow + s, rate)


def shift_integrate(f: ExpPoly, t_upper: float, params: KernelParams) -> ExpPoly:
    """Apply the offspring propagator to f and cut at t_upper.

    Returns g(z) = a * int_0^{t_upper - z} f(z + y) exp((a - b) y) dy as an
    ExpPoly on [0, t_upper].  Requires f to be defined up to t_upper.
    """
    if not t_upper > 0.0:
        raise ValueError(f"t_upper must be > 0, got {t_upper}")
    if f.domain_end < t_upper * (1.0 - DOMAIN_SLACK):
        raise ValueError(
            f"integrand domain ends at {f.domain_end}, before t_upper={t_upper}"
        )
    a = params.a
    out: list[tuple[float, int, RateExpr]] = []
    for coeff, p, rho in f.terms:
        mu_expr = (rho[0] + 1, rho[1] - 1)
        mu = rate_value(mu_expr, params)
        degenerate = rate_is_zero(mu_expr, params)
        use_series = not degenerate and abs(mu) * t_upper <= SERIES_SWITCH
        n_series = _series_length(abs(mu) * t_upper) if use_series else 0
        for j in range(p + 1):
            # c_j multiplies z^(p-j) * int_0^{t_upper - z} y^j exp(mu y) dy
            c_j = a * coeff * math.comb(p, j)
            zpow = p - j
            if degenerate:
                out.extend(
                    _expand_in_z([(c_j / (j + 1), j + 1)], t_upper, zpow, rho)
                )
            elif use_series:
                pieces = []
                mu_pow = 1.0
                for r in range(n_series + 1):
                    pieces.append((c_j * mu_pow / (j + 1 + r), j + 1 + r))
                    mu_pow *= mu / (r + 1)
                out.extend(_expand_in_z(pieces, t_upper, zpow, rho))
            else:
                exp_at_t = math.exp(mu * t_upper)
                pieces = [
                    (
                        c_j * (-1.0) ** i * math.perm(j, i) / mu ** (i + 1) * exp_at_t,
                        j - i,
                    )
                    for i in range(j + 1)
                ]
                # exp(mu * (t_upper - z)) leaves rate rho - mu = b - a on z
                out.extend(_expand_in_z(pieces, t_upper, zpow, (-1, 1)))
                out.append(
                    (c_j * (-1.0) ** (j + 1) * math.factorial(j) / mu ** (j + 1), zpow, rho)
                )
    return ExpPoly.from_terms(out, t_upper)


def integrate_over_domain(f: ExpPoly, t_upper: float, params: KernelParams) -> float:
    """Definite integral int_0^t_upper f(z) dz, term by term in closed form."""
    if not t_upper > 0.0:
        raise ValueError(f"t_upper must be > 0, got {t_upper}")
    if f.domain_end < t_upper * (1.0 - DOMAIN_SLACK):
        raise ValueError(
            f"integrand domain ends at {f.domain_end}, before t_upper={t_upper}"
        )
    parts: list[float] = []
    for coeff, p, rho in f.terms:
        mu = rate_value(rho, params)
        if rate_is_zero(rho, params):
            parts.append(coeff * t_upper ** (p + 1) / (p + 1))
        elif abs(mu) * t_upper <= SERIES_SWITCH:
            mu_pow = 1.0
            for r in range(_series_length(abs(mu) * t_upper) + 1):
                parts.append(coeff * mu_pow * t_upper ** (p + 1 + r) / (p + 1 + r))
                mu_pow *= mu / (r + 1)
        else:
            exp_at_t = math.exp(mu * t_upper)
            for i in range(p + 1):
                parts.append(
                    coeff * (-1.0) ** i * math.perm(p, i) * t_upper ** (p - i)
                    / mu ** (i + 1) * exp_at_t
                )
            parts.append(coeff * (-1.0) ** (p + 1) * math.factorial(p) / mu ** (p + 1))
    return math.fsum(parts)
