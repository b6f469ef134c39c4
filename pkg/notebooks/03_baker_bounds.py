# %% [markdown]
# # Heights, Matveev and the absolute bound on n1

# %%
from padovan_repdigits.heights import (
    PUBLISHED_CHAIN,
    case_bounds,
    fixed_point_bound,
    matveev_constant,
)

print("Matveev constant (t=3, D=3):", matveev_constant(3, 3))

chain = case_bounds()
for i, (got, ref) in enumerate(zip((chain.c1, chain.c2, chain.c3), PUBLISHED_CHAIN), 1):
    print(f"c{i} = {got:.4e}   published {ref:.2e}   ratio {got / ref:.3f}")

# %%
print("n1 <", f"{chain.fixed_point:.4e}", "-> rounded", f"{chain.absolute_bound:.0e}")
print("with the published c3:", f"{fixed_point_bound(3, 1.94e42):.4e}")
