"""Central sections of the cube and polydisc: volume, facet integrals, perimeter."""

# %%
import math

from cubeslice import a_max, a_min, canonicalize, section_profile, section_volume, perimeter

# Directions are canonicalized: absolute values, sorted nonincreasing, unit norm.
d = canonicalize([0.3, -1.0, 0.5])
print("canonical direction:", d.coords)

# %%
# The section through the centre orthogonal to a_min is a facet-parallel slice.
for field in ("real", "complex"):
    print(field, "a_min: A =", section_volume(a_min(4, field)), " P =", perimeter(a_min(4, field)))

# %%
# The diagonal of a 2-face gives the largest section and, as checked later, the largest perimeter.
for n in (3, 5, 8):
    pr = section_profile(a_max(n))
    print(f"n={n}: A={pr.A:.12f} (sqrt2={math.sqrt(2):.12f})  P={pr.P:.10f}  "
          f"target={2 * ((n - 2) * math.sqrt(2) + 1):.10f}")

# %%
# Facet integrals D_k sum to (n-1) A and none exceeds A.
pr = section_profile(canonicalize([0.8, 0.5, 0.3, 0.1]))
print("A =", pr.A)
print("D =", pr.D)
print("sum D - (n-1) A =", pr.identity_residual)
print("Hoelder bound:", pr.holder_bound, " projection bound:", pr.projection_bound)

# %%
# Off-centre sections A(a, t) vanish once t exceeds sum a_k.
for t in (0.0, 0.5, 1.0, 1.5, 2.0):
    print(f"A(a, {t}) = {section_volume(d, t):.10f}")
