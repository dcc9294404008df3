# %% [markdown]
# # Alternating sums over edge subsets
#
# Summing (-1)^|F| N(G - F, x) over all edge subsets F leaves 1 for an
# edgeless graph, a signed pair of monomials for complete bipartite graphs
# (plus isolated vertices), and 0 otherwise. The block lemmas behind this
# are checked by direct enumeration.

# %%
from dompoly import (
    alternating_edge_subset_sum,
    complete_bipartite_graph,
    cycle_graph,
    empty_graph,
    lemma_parity_signed_sum,
    lemma_pi_signed_sum,
    path_graph,
)
from dompoly.identities import shape_label

# %%
for g in [empty_graph(3), path_graph(3), cycle_graph(4), complete_bipartite_graph(2, 3), path_graph(4), cycle_graph(5)]:
    print(f"{shape_label(g):>8}: {alternating_edge_subset_sum(g)}")

# %%
for k, r in [(1, 3), (2, 2), (3, 2), (2, 5)]:
    print(f"k={k} r={r}: product sum {lemma_pi_signed_sum(k, r):+d}, covering sum {lemma_parity_signed_sum(k, r):+d}")
