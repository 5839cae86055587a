"""
Borel law of branching totals
=============================

The total size of a branching cascade with Poisson(mu) offspring follows
the Borel distribution.  The same partition machinery that powers the
process moments gives its cumulants of any order, and the cluster
simulator reproduces the law empirically.
"""

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from hawkesmoments import (
    KernelParams,
    borel_cumulant,
    borel_moment,
    borel_pmf,
    path_rng,
    sample_clusters,
)

# Low orders in closed form, for a few offspring means.
print("mu      mean        variance    kappa3      kappa4")
for mu in (0.1, 0.3, 0.5):
    row = [borel_cumulant(n, mu) for n in (1, 2, 3, 4)]
    print(f"{mu:.1f}  " + "  ".join(f"{v:10.4f}" for v in row))

# Moments follow from cumulants through the partition-sum transform.
mu = 0.5
print(f"\nmu = {mu}: E[N] = {borel_moment(1, mu):.6f},"
      f" E[N^2] = {borel_moment(2, mu):.6f},"
      f" E[N^3] = {borel_moment(3, mu):.6f}")

# Empirical check: cascade totals from the cluster simulator.  With kernel
# amplitude a and decay b the offspring mean is a/b, so a = 0.5, b = 1
# samples Borel(0.5) totals.
params = KernelParams(a=0.5, b=1.0, nu=1.0)
sample = sample_clusters(params, n_clusters=200_000, rng=path_rng(2024, 0))
sizes = sample.sizes

print(f"\nsampled {sizes.size} cascades:"
      f" mean {sizes.mean():.4f} vs exact {borel_moment(1, mu):.4f}")

support = np.arange(1, 13)
empirical = np.array([(sizes == n).mean() for n in support])
exact = np.array([borel_pmf(int(n), mu) for n in support])

fig, ax = plt.subplots(figsize=(8, 5))
ax.bar(support - 0.2, empirical, width=0.4, label="simulated")
ax.bar(support + 0.2, exact, width=0.4, label="exact pmf")
ax.set_xlabel("cascade size n")
ax.set_ylabel("P[N = n]")
ax.set_yscale("log")
ax.legend()
fig.savefig("borel_pmf.png", dpi=120)
print("wrote borel_pmf.png")
