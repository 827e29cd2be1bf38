"""Search for the direction with the largest section perimeter, and the tools that bound it."""

# %%
from cubeslice import extremal
from cubeslice.sections import a_min, perimeter

# A coarse grid ranks directions; Nelder-Mead polishes the best few.
for field in ("real", "complex"):
    cfg = extremal.SearchConfig(n=4, field=field, grid_resolution=10, multistarts=2, max_local_evals=60)
    rep = extremal.search_max_perimeter(cfg)
    print(f"{field}: best {rep.best_direction.coords} P={rep.best_value:.8f} "
          f"target={rep.target_value:.8f} distance to a_max={rep.distance_to_a_max:.1e}")

# %%
# Lower bound: every direction beats 2 (n-2) (real) or 2 pi (n-2) (complex).
print("a_min perimeter, n=6:", perimeter(a_min(6)), ">= 8")

# %%
# Interpolation bounds used when two coordinates are large.
for n in (5, 6, 7):
    rep = extremal.interpolation_sweep(n)
    print(f"n={n}: {len(rep.records)} checks, passed={rep.passed}, window={rep.info['window']}")
print("crossing a1 =", extremal.crossing_a1())

# %%
# The two-factor Hoelder integral on its box.
print("two-factor integral at (0.71, 0.5):", extremal.lemma10_check(0.71, 0.5), "<=", extremal.PAIR_BOUND)
