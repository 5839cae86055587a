"""Exact joint moments and cumulants of exponential-kernel Hawkes processes.

The analytic side builds cumulants of any order by recursion over set
partitions, with all intermediate objects kept as closed-form exponential
polynomials; the Monte Carlo side estimates the same quantities from
simulated paths for cross-validation.
"""

from .borel import borel_cumulant, borel_moment, borel_pmf
from .combinatorics import (
    BELL_NUMBERS,
    SizeCapError,
    complete_bell,
    cumulants_from_moments,
    enumerate_set_partitions,
    joint_cumulant_from_block_moments,
    joint_moment_from_block_cumulants,
    moments_from_cumulants,
    partial_bell,
)
from .exppoly import ExpPoly, ExpPolyTerm, integrate_over_domain, rate_value, shift_integrate
from .moments import (
    DEFAULT_ORDER_CAP,
    CumulantCache,
    joint_cumulant,
    joint_moment,
    kappa_z_first,
    kappa_z_joint,
    kappa_z_univariate,
    univariate_cumulant,
    univariate_moment,
)
from .params import KernelParams
from .simulate import (
    ClusterSample,
    EventSample,
    MCConfig,
    MomentEstimate,
    SupercriticalError,
    count_at,
    estimate_joint_moment,
    estimate_joint_moments,
    export_path,
    path_rng,
    sample_clusters,
    simulate,
    simulate_cluster,
    simulate_thinning,
    write_path_csv,
)

__version__ = "0.1.0"

__all__ = [
    "BELL_NUMBERS",
    "ClusterSample",
    "CumulantCache",
    "DEFAULT_ORDER_CAP",
    "EventSample",
    "ExpPoly",
    "ExpPolyTerm",
    "KernelParams",
    "MCConfig",
    "MomentEstimate",
    "SizeCapError",
    "SupercriticalError",
    "borel_cumulant",
    "borel_moment",
    "borel_pmf",
    "complete_bell",
    "count_at",
    "cumulants_from_moments",
    "enumerate_set_partitions",
    "estimate_joint_moment",
    "estimate_joint_moments",
    "export_path",
    "integrate_over_domain",
    "joint_cumulant",
    "joint_cumulant_from_block_moments",
    "joint_moment",
    "joint_moment_from_block_cumulants",
    "kappa_z_first",
    "kappa_z_joint",
    "kappa_z_univariate",
    "moments_from_cumulants",
    "partial_bell",
    "path_rng",
    "rate_value",
    "sample_clusters",
    "shift_integrate",
    "simulate",
    "simulate_cluster",
    "simulate_thinning",
    "univariate_cumulant",
    "univariate_moment",
    "write_path_csv",
]
