# %% [markdown]
# # Roots of x^3 - x - 1 and the Binet coefficients
#
# Everything numeric is an arb ball: a midpoint with a rigorous radius.

# %%
from flint import arb

from padovan_repdigits.numerics import plastic_roots, working_precision
from padovan_repdigits.padovan import binet_coefficients, error_term, padovan

roots = plastic_roots(60)
print("alpha =", roots.alpha)
print("beta  =", roots.beta)
print("|beta|**2 * alpha =", abs(roots.beta) ** 2 * roots.alpha)  # = 1 since alpha*beta*gamma = 1

# %% [markdown]
# The coefficient of alpha**n in P_n is about 0.545.  The same sequence shifted
# by one index has leading coefficient alpha*a, about 0.722.

# %%
c = binet_coefficients(roots)
print("a         =", c.a)
print("alpha * a =", c.shifted_a)
print("|b|       =", abs(c.b))

# %%
# e(n) = P_n - a alpha**n shrinks like alpha**(-n/2)
for n in (1, 5, 20, 100):
    e = error_term(n, c)
    with working_precision(60):
        print(n, padovan(n), float(e.mid()), float((roots.alpha ** (arb(-n) / 2)).mid()))
