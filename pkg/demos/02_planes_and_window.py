# %% [markdown]
# The space of L4 splits into two planes fixed by an order-24 group.
# Minimal vectors mostly project with equal norms; the exceptions fix a
# dodecagonal window in the perpendicular plane.

# %%
from latglue.project import (
    PAR_GRAM,
    forbidden_vectors,
    g0_group,
    lemma1_scan,
    minimal_split_census,
    perp_coords,
    split_norms,
)
from latglue.glue import format_glue
from latglue.windowq import make_window, window_area, window_diameter_sq, window_vertices

# %%
print("G0 order", len(g0_group()))
for row in PAR_GRAM:
    print("  ".join(f"{str(x):>4s}" for x in row))

# %% split norms of the L4 parts of minimal vectors, by orbit
for o in minimal_split_census():
    print(f"{format_glue(o.h):20s} {format_glue(o.rep):22s} x{o.size}  par {o.n_par}  perp {o.n_perp}")

# %% the thin class is the only one with unequal splits; its perp-long orbit gives 12 forbidden vectors
F = forbidden_vectors()
print(len(F), "forbidden vectors, perp norm", split_norms(F[0])[1])
for f in F[:3]:
    print("  ", format_glue(f), "->", tuple(str(c) for c in perp_coords(f)))

# %% short, thin vectors are minimal (exhaustive check)
rep = lemma1_scan()
print("lemma:", rep.checked, "candidates,", len(rep.violations), "violations")

# %% the window: a regular dodecagon with half its boundary
w = make_window()
print("area", window_area(w), " diameter²", window_diameter_sq(w))
print("included edges", sorted(w.included_edges), " included vertices", sorted(w.included_vertices))
for X, Y in window_vertices(w)[:4]:
    print(f"  vertex ({X}, {Y})  ≈ ({float(X):+.4f}, {float(Y):+.4f})")
