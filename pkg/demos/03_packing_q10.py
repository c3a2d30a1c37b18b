# %% [markdown]
# Cut the glued lattice with the window to get a 10-dimensional packing,
# then certify it on a finite patch.

# %%
import time

from latglue.windowq import (
    density_estimate,
    find_period,
    generate_patch,
    kissing_configuration,
    make_window,
    verify_packing,
)

w = make_window()

# %% a patch: one record per admitted L4 fiber, each carrying a copy of L8
t = time.perf_counter()
patch = generate_patch(w, 8)
print(len(patch), "fibers in", round(time.perf_counter() - t, 1), "s")

# %% every pair of centers is at distance >= 2, and many touch
rep = verify_packing(patch)
print("min distance²", rep.min_dist_sq, "over", rep.pairs_checked, "close fiber pairs")

# %% at the singular centering the origin sphere touches 378 others
k = kissing_configuration(w)
print("kissing", k.count)
for c, n in sorted(k.cosines.items()):
    print(f"  cos {str(c):12s} {n:6d} pairs")
print("  antipodal pairs", k.antipodal_pairs)

# %% density: exact value and a count in a disc
est = density_estimate(w, 8, patch)
print("exact", est.exact, " empirical", round(est.empirical, 6), "from", est.fibers, "fibers")

# %% no translation inside the box maps the patch to itself
print("period:", find_period(patch))

# %% a generic centering still gives a packing
generic = make_window(("1/7", 0, "1/5", 0))
print("generic min distance²", verify_packing(generate_patch(generic, 5)).min_dist_sq)
