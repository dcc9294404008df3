# %% [markdown]
# # graph6 pipelines
#
# Write every labeled graph on 4 vertices as graph6, then verify each one
# the way ``dompoly batch-verify`` does.

# %%
import io

from dompoly import all_labeled_graphs, parse_graph6, verify_all, write_graph6
from dompoly.cli import run

# %%
lines = [write_graph6(g) for g in all_labeled_graphs(4)]
print(lines[:8], "...")
print(all(parse_graph6(s) == g for s, g in zip(lines, all_labeled_graphs(4))))

# %%
print(verify_all(parse_graph6(lines[-1])).to_text())

# %%
out = io.StringIO()
code = run(["batch-verify", "-"], stdin=io.StringIO("\n".join(lines)), stdout=out)
print(out.getvalue().strip(), "| exit", code)
