# %% [markdown]
# Glue for A2+A2+D4, and the 12-dimensional lattice it produces.
#
# Run from the repository root: python demos/01_glue_and_l12.py

# %%
from latglue.glue import aut_group, decompose, format_glue, glue, orbits, table_l4, table_l8, x8
from latglue.laminate import densities, export_gram_l12, format_gram, kissing_number, table3

# %% the glue group H has 36 elements, in 6 orbits under 48 symmetries
print(len(aut_group()), "symmetries")
for rep, members in orbits():
    print(f"{format_glue(rep):20s} orbit of {len(members)}")

# %% an element and its exponents over the four generators
h = glue("5/6", "1/3", "5/6", "1/3")
print(format_glue(h), "=", tuple(decompose(h)), "-> L8 glue", [str(c) for c in x8(h)])

# %% depths in L8 and L4, recomputed by enumeration
for r8, r4 in zip(table_l8(), table_l4()):
    print(f"{format_glue(r8.h):20s} Δ8={str(r8.depth):5s} τ8={r8.tau:3d}   Δ4={str(r4.depth):4s} τ4={r4.tau}")

# %% gluing: every nonzero class has minimum Δ8+Δ4 hit τ8·τ4 times
for row in table3():
    print(format_glue(row.h), "norm", row.min_norm, "count", row.count, "x", row.orbit_size, "=", row.number)

total, _ = kissing_number()
d8, d4, d12 = densities()
print("kissing number", total, " center densities", d8, d4, d12)

# %% an explicit integral Gram matrix, determinant 1024
print(format_gram(export_gram_l12()))
