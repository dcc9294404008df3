# %% [markdown]
# # Complete bipartite subgraphs and the dominating-set count
#
# d(G) = 2^n - 1 + 2(a - b) where a and b count complete bipartite
# subgraphs of the complement with both sides even / both sides odd.

# %%
from dompoly import (
    complement,
    count_complete_bipartite_subgraphs,
    count_parity_classes_fast,
    cycle_graph,
    dominating_count_via_bipartite,
    dominating_set_count,
    random_gnp,
)

# %%
c4 = cycle_graph(4)
print(count_complete_bipartite_subgraphs(c4).to_text())

# %%
census = count_complete_bipartite_subgraphs(complement(c4))
print("complement of C4:", census.counts, "a =", census.a, "b =", census.b)
print("2^4 - 1 + 2(a - b) =", 2**4 - 1 + 2 * (census.a - census.b), "vs brute force", dominating_set_count(c4))

# %% [markdown]
# The parity totals alone are enough, and can be had without the census.

# %%
g = random_gnp(18, 1, 2, 77)
print("fast (a, b) on complement:", count_parity_classes_fast(complement(g)))
print("d by formula:", dominating_count_via_bipartite(g), " d by enumeration:", dominating_set_count(g))
