"""
Sample path of the count and its intensity
==========================================

Simulates one path, samples the counting process X_t and the conditional
intensity lambda_t on a regular grid, writes them as CSV with columns
t,X,lambda, and plots both.  The intensity jumps by a at every event and
relaxes back toward nu at rate b.
"""

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

from hawkesmoments import KernelParams, export_path, path_rng, write_path_csv

params = KernelParams(a=0.5, b=1.0, nu=1.0)

table = export_path(params, horizon=20.0, step=0.01, rng=path_rng(5, 0))
with open("sample_path.csv", "w", newline="") as out:
    write_path_csv(table, out)
print(f"wrote sample_path.csv ({table.shape[0]} rows)")

t, counts, intensity = table[:, 0], table[:, 1], table[:, 2]
print(f"events on [0, 20]: {int(counts[-1])},"
      f" peak intensity {intensity.max():.3f}")

fig, (top, bottom) = plt.subplots(2, 1, figsize=(10, 6), sharex=True)
top.step(t, counts, where="post")
top.set_ylabel("X_t")
bottom.plot(t, intensity)
bottom.axhline(params.nu, linestyle="--", linewidth=0.8)
bottom.set_xlabel("t")
bottom.set_ylabel("lambda_t")
fig.savefig("sample_path.png", dpi=120)
print("wrote sample_path.png")
