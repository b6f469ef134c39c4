# %% [markdown]
# # Three-stage reduction
#
# M = 10**6 runs in a few seconds; the full M = 3e48 sweep takes about a
# minute per core (pass workers=... to stage3).

# %%
from padovan_repdigits.reduction import reduction_setup, stage1, stage2, stage3

setup = reduction_setup(400)
M = 10**6
s1 = stage1(M, setup)
s2 = stage2(M, k_max=s1.bound, setup=setup)
s3 = stage3(M, k_max=s1.bound + s2.bound, s_max=s2.bound, setup=setup)
for s in (s1, s2, s3):
    print(f"stage {s.stage}: {s.cases} cases, bound {s.bound}, "
          f"min eps {s.min_epsilon_value:.3g} at {s.min_epsilon_at}, {len(s.exceptions)} integer shifts")

# %%
# mu(9, 11) is an integer, so eps is never positive there
for e in s2.exceptions:
    print(e)
