"""Independent closed-form oracles used by the tests.

Each function is a literal transcription of a published closed-form
expression, written directly in terms of (a, b, t) so that agreement with
the recursive engine is a genuine cross-check rather than a tautology.
All assume unit immigrant intensity.
"""

import math


def first_moment(a: float, b: float, t: float) -> float:
    """E[X_t] for a != b."""
    return (b * b * t + a * (math.exp((a - b) * t) - b * t - 1.0)) / (a - b) ** 2


def second_joint_moment(a: float, b: float, t: float, T: float) -> float:
    """E[X_t X_T] for t <= T and a != b."""
    e = math.exp
    core = 0.5 * e(-a * t - b * (t + T)) * (
        2.0 * b**4 * t * e(a * t + b * (t + T))
        + a * a * b * (
            -e(a * (2 * t + T))
            + e(2 * b * t + a * T)
            + 2 * b * t * e(2 * a * t + b * T)
            + 2 * b * t * e(b * t + a * (t + T))
        )
        + 2.0 * a**3 * (
            e(a * (2 * t + T))
            - b * t * e(2 * a * t + b * T)
            - e(b * t + a * (t + T)) * (1 + b * t)
        )
        - 2.0 * a * b * b * (
            e(2 * b * t + a * T)
            - 2 * e(2 * a * t + b * T)
            - e(b * t + a * (t + T))
            + e(a * t + b * (t + T)) * (2 + b * t)
        )
    )
    prod = (b * b * t + a * (e((a - b) * t) - b * t - 1.0)) * (
        b * b * T + a * (e((a - b) * T) - b * T - 1.0)
    )
    return (core + prod) / (a - b) ** 4


def second_moment(a: float, b: float, t: float) -> float:
    """E[X_t^2] for a != b."""
    e = math.exp
    sq = (b * b * t + a * (-1.0 + e((a - b) * t) - b * t)) ** 2 / (a - b) ** 4
    core = e(-2 * b * t) * (
        2.0 * b**4 * e(2 * b * t) * t
        + a * a * b * (-e(2 * a * t) + e(2 * b * t) + 4 * b * e((a + b) * t) * t)
        - 2.0 * a * b * b * (-3 * e((a + b) * t) + e(2 * b * t) * (3 + b * t))
        + 2.0 * a**3 * (e(2 * a * t) - e((a + b) * t) * (1 + 2 * b * t))
    )
    return sq + core / (2.0 * (a - b) ** 4)


def borel_cumulant_closed(n: int, mu: float) -> float:
    """Total-progeny cumulants of orders 1..4 in closed form."""
    if n == 1:
        return 1.0 / (1.0 - mu)
    if n == 2:
        return mu / (1.0 - mu) ** 3
    if n == 3:
        return mu * (1.0 + 2.0 * mu) / (1.0 - mu) ** 5
    if n == 4:
        return mu * (1.0 + 8.0 * mu + 6.0 * mu * mu) / (1.0 - mu) ** 7
    raise ValueError(f"no closed form tabulated for n={n}")
