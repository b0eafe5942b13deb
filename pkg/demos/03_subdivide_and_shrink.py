# %% [markdown]
# # Growing and shrinking graphs
#
# Odd subdivisions keep both classes intact. Replacing an edge by a path
# through two new vertices weighted by the edge strength keeps a critical
# facet-graph critical and facet-defining; weight-1 paths do the same for
# facet-defining graphs of the ordering polytope, and shrinking undoes them.

# %%
from critgraph.canon import isomorphic
from critgraph.graph import complete, cycle
from critgraph.polytopes import is_cfg, is_one_cfg
from critgraph.stability import defect
from critgraph.transforms import (
    elementary_odd_subdivision,
    reduce_cfg,
    shrink_to_basis,
    to_one_cfg,
    unit_odd_subdivision,
)
from critgraph.worth import subdefect

k4 = complete(4, [2, 2, 2, 2])
h = elementary_odd_subdivision(k4, [("v1", "v2")])
print("new vertices:", [v for v in h.ids if "#" in v], "weights", h.weights[-2:])
print("still a CFG:", is_cfg(h), " defect", defect(k4), "->", defect(h))

# %% [markdown]
# Subdividing every edge of a facet-defining graph with weight-1 paths gives a
# 1-critical facet-graph whose defect is the original subdefect.

# %%
one = to_one_cfg(complete(4))
print("K4 ->", one.n, "vertices; 1-critical", is_one_cfg(one), "; defect", defect(one))

# %% [markdown]
# Shrinking runs the other way until nothing can be contracted.

# %%
g = unit_odd_subdivision(cycle(5), {("v1", "v2"): 5})
print("C5 with a 5-path:", g.n, "vertices, subdefect", subdefect(g))
base = shrink_to_basis(g)
print("shrinks to", base.n, "vertices; triangle:", isomorphic(base, complete(3)))
print("C11 reduces to the triangle:", isomorphic(reduce_cfg(cycle(11)), complete(3)))
