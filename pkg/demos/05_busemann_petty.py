"""Cube versus ball: when section perimeters do not control surface area."""

# %%
from cubeslice import bpcheck

for row in bpcheck.bp_table(10, 16):
    print(f"n={row.n:3d} radius={row.radius:.6f} BP={row.bp:.6f}")

# %%
print("real root:", bpcheck.bp_root(), " first counterexample:", bpcheck.first_counterexample())
print("complex root:", bpcheck.bp_root("complex"),
      " first counterexample:", bpcheck.first_counterexample("complex"))
