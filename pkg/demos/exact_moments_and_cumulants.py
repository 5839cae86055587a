"""
Exact moments and cumulants of a self-exciting process
======================================================

Every quantity below is computed in closed form: intermediate objects are
exponential polynomials in the ancestor position z, and the only floating
point work is evaluating the final coefficients.
"""

from hawkesmoments import (
    CumulantCache,
    KernelParams,
    joint_cumulant,
    joint_moment,
    kappa_z_first,
    univariate_cumulant,
    univariate_moment,
)

# A subcritical kernel: events arrive at base rate nu and each event raises
# the intensity by a, decaying at rate b.  Mean offspring per event is a/b.
params = KernelParams(a=0.5, b=1.0, nu=1.0)
print(f"branching ratio a/b = {params.branching_ratio}")

# The building block: the expected contribution of a single ancestor at z
# to the count at time t, as an explicit function of z.
poly = kappa_z_first(2.0, params)
print("\nper-ancestor first-order function on [0, 2]:")
for line in poly.debug_lines():
    print("  " + line)
print(f"value at its own time (self-count): {poly.eval(2.0, params)}")

# Expected count at t = 2, then the first few central descriptors.
m1 = joint_moment([2.0], params)
var = univariate_cumulant(2, 2.0, params)
skew_num = univariate_cumulant(3, 2.0, params)
print(f"\nE[X_2]      = {m1:.12g}")
print(f"Var[X_2]    = {var:.12g}")
print(f"kappa3[X_2] = {skew_num:.12g}")

# Joint quantities take one time per factor; repeated times give powers.
# E[X_1 X_2] and the covariance Cov[X_1, X_2]:
m12 = joint_moment([1.0, 2.0], params)
k12 = joint_cumulant([1.0, 2.0], params)
print(f"\nE[X_1 X_2]    = {m12:.12g}")
print(f"Cov[X_1, X_2] = {k12:.12g}")

# With a = 0 there is no excitation and the process is plain Poisson, so
# E[X_s X_t] = nu^2 s t + nu min(s, t).
poisson = KernelParams(a=0.0, b=1.0, nu=1.0)
print(f"\nPoisson check, E[X_1 X_2] = {joint_moment([1.0, 2.0], poisson):.12g}"
      " (expected 3)")

# The degenerate kernel a = b is handled by a dedicated polynomial branch,
# not by taking numerical limits.
critical = KernelParams(a=1.0, b=1.0, nu=1.0)
print(f"critical kernel a = b, E[X_2] = {joint_moment([2.0], critical):.12g}")

# A shared cache makes mixed-order sweeps cheap: every cumulant of lower
# order is reused by the higher orders.
cache = CumulantCache()
print("\nmoments E[X_2^n] for n = 1..6:")
for order in range(1, 7):
    value = univariate_moment(order, 2.0, params, cache=cache)
    print(f"  n = {order}: {value:.12g}")
