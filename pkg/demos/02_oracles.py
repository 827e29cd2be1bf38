"""Independent checks: exact weighted Irwin-Hall densities and Monte Carlo."""

# %%
from cubeslice import (canonicalize, mc_complex_section, perimeter, perimeter_oracle,
                       section_volume, section_volume_oracle)
from cubeslice.oracle import irwin_hall_exact

# A real section volume is the density at 0 of sum a_k U_k with U_k uniform.
d = canonicalize([3.0, 2.0, 1.0])
print("quadrature:", section_volume(d))
print("exact     :", section_volume_oracle(d))
print("as a fraction of the rescaled weights:", irwin_hall_exact([3.0, 2.0, 1.0], 0.0))

# %%
# Perimeters through the same exact density, facet by facet.
d = canonicalize([0.9, 0.7, 0.4, 0.2, 0.1])
print("perimeter quadrature:", perimeter(d))
print("perimeter exact     :", perimeter_oracle(d))

# %%
# Complex sections have no piecewise-polynomial density; a seeded Monte Carlo estimate
# reproduces bit for bit for a fixed (samples, seed) pair.
d = canonicalize([0.8, 0.5, 0.3], "complex")
mc = mc_complex_section(d, samples=10**6, seed=7)
print("quadrature:", section_volume(d))
print(f"Monte Carlo: {mc.value:.4f} +- {mc.std_error:.4f}")
