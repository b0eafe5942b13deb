# %% [markdown]
# # Small bases
#
# Every facet-defining graph of a given subdefect shrinks to a graph from a
# finite list. We search that list directly: connected structures of bounded
# degree (one per isomorphism class), every weighting within the weight
# bound, fast numpy screening, then exact checks on the survivors.

# %%
import time

from critgraph.basis import SearchSpace, enumerate_basis

for target, d, cap in [("fdg", 1, 8), ("cfg", 1, 8), ("fdg", 2, 8), ("cfg", 2, 8)]:
    start = time.perf_counter()
    cat = enumerate_basis(SearchSpace(target, d, cap))
    print(f"--- {target} defect {d}, up to {cap} vertices ({time.perf_counter() - start:.1f}s)")
    for m in cat.members:
        g = m.graph
        print(f"  n={g.n} weights={g.weights} strengths={m.strengths} via {m.certificate}")

# %% [markdown]
# Raising the cap to ten vertices takes about fifteen seconds; see
# `critgraph enumerate --target cfg --defect 2 --max-n 10`.
