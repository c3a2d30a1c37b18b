# %% [markdown]
# Projected centers fall into classes.  The ones never at the shortest
# parallel separation from any other center are the vertices of a tiling
# by triangles, squares and thin rhombi.

# %%
from pathlib import Path

from latglue.windowq import extract_tiling, generate_patch, make_window, render_svg

patch = generate_patch(make_window(), 12)
t = extract_tiling(patch)

# %%
print("shortest separation²", t.shortest)
print("separations among special centers", [str(v) for v in t.special_separations])
print("edge length²", t.edge_sq)
print(dict(t.counts))

# %% rings of 12 fibers around tile vertices
sizes = sorted(set(t.rings.values()))
print({s: sum(1 for v in t.rings.values() if v == s) for s in sizes})

# %%
out = Path("tiling.svg")
out.write_text(render_svg(patch, t))
print("wrote", out)
