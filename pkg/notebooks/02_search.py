# %% [markdown]
# # Direct search
#
# All N = P_n1 + P_n2 + P_n3 with n1 >= n2 >= n3 that are repdigits of length >= 2.

# %%
import time

from padovan_repdigits.search import enumerate_solutions, naive_solutions

t0 = time.perf_counter()
rs = enumerate_solutions(500, 100)
print(f"{len(rs)} representations of {len(rs.values)} values in {time.perf_counter() - t0:.1f}s")

for N, group in rs.by_value.items():
    print(f"{N:>5}:", ", ".join(f"({s.n1},{s.n2},{s.n3})" for s in group))

# %%
# brute force over every index triple agrees on small ranges
print(enumerate_solutions(60, 12) == naive_solutions(60, 12))
