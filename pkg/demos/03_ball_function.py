"""Ball's function f(p), its bounds, special points and large-p behaviour."""

# %%
import numpy as np

from cubeslice import ballfn

for p in (2.0, ballfn.P_LOW, 2.25, 3.0, 10.0, 40.0):
    print(f"f({p:.4f}) = {ballfn.ball_f(p):.10f}")
print("sup over p >= 2 tends to sqrt(3/pi) =", ballfn.SQRT_3_OVER_PI)

# %%
sp = ballfn.find_special_points()
print(f"f(p1) = sqrt(3/pi) at p1 = {sp.p1:.6f}")
print(f"minimum of f at p2 = {sp.p2:.6f}")
print(f"inflection at p0 = {sp.p0:.6f} (witness route: {sp.p0_witness:.6f})")

# %%
# Explicit bound pipelines: elementary pieces that add up to an upper bound.
for bound in (ballfn.appendix_bound_9_4(), ballfn.appendix_bound_sqrt2_half()):
    print(f"p = {bound.p:.4f}: total {bound.total:.6f}")
    for name, value in bound.pieces.items():
        print(f"    {name:>5s} {value:.6f}")

# %%
# Convexity witness stays above 1/5 between sqrt2 + 1/2 and 9/4.
grid = np.arange(ballfn.P_LOW, 2.25 + 1e-12, 0.05)
print("witness:", np.round([ballfn.convexity_witness(p) for p in grid], 4))

# %%
# |sinc| against exp(-x^2/6): their distribution functions cross once.
for p in (ballfn.P_LOW, 2.0, 2.25):
    print(f"crossing point for p={p:.4f}:", np.round(ballfn.crossing_point(p), 4))
print("large p:", ballfn.ball_f(40.0), "vs asymptotic", ballfn.kos_asymptotic(40.0))
