# %% [markdown]
# # Domination polynomials, two ways
#
# Count dominating sets of a few small graphs by brute force, then get the
# same polynomial from the neighborhood complex of the complement.

# %%
from dompoly import (
    complement,
    cycle_graph,
    dominating_set_count,
    domination_polynomial,
    domination_polynomial_via_complement,
    neighborhood_polynomial,
    one_plus_x_power,
    path_graph,
    random_gnp,
)

# %%
for name, g in [("P3", path_graph(3)), ("C4", cycle_graph(4)), ("P6", path_graph(6))]:
    print(f"{name}: D = {domination_polynomial(g)}   d = {dominating_set_count(g)}")

# %% [markdown]
# Every subset either dominates G or sits inside a neighborhood of the
# complement, never both, so D(G) + N(complement) is (1+x)^n.

# %%
g = random_gnp(12, 1, 2, seed=2024)
d = domination_polynomial(g)
nbar = neighborhood_polynomial(complement(g))
print("D + N(Gbar) == (1+x)^n:", d + nbar == one_plus_x_power(g.n))
print("via complement agrees:", domination_polynomial_via_complement(g) == d)

# %% [markdown]
# The count is always odd.

# %%
print([dominating_set_count(random_gnp(10, 1, 3, s)) % 2 for s in range(10)])
