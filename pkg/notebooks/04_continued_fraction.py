# %% [markdown]
# # Continued fraction of tau = log 10 / log alpha

# %%
from padovan_repdigits.contfrac import first_convergent_exceeding, legendre_irrationality_bound, tau_expansion

cf = tau_expansion(400, 160)
print(cf.partial_quotients[:20])

M = 3 * 10**48
j = first_convergent_exceeding(cf, 6 * M)
print("first q > 6M at index", j)  # 0-based
print("p =", cf.p(j))
print("q =", cf.q(j))
print("a(M) =", legendre_irrationality_bound(cf, M).aM)
