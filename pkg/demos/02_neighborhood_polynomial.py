# %% [markdown]
# # The neighborhood polynomial
#
# Three independent routes: testing every subset against the open
# neighborhoods, an inclusion-exclusion sum over common neighborhoods, and
# an expansion over complete bipartite subgraphs.

# %%
from dompoly import complete_bipartite_graph, in_neighborhood_complex, path_graph, random_gnp
from dompoly.neighborhood import neighborhood_polynomial

# %%
p3 = path_graph(3)
print("{0,2} in complex:", in_neighborhood_complex(p3, 0b101))
print("{0,1} in complex:", in_neighborhood_complex(p3, 0b011))

# %%
for g in [p3, complete_bipartite_graph(1, 3), random_gnp(11, 1, 2, 5)]:
    results = {m: str(neighborhood_polynomial(g, method=m)) for m in ("direct", "inclexcl", "bipartite")}
    print(results["direct"], "| all agree:", len(set(results.values())) == 1)
