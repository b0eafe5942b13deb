# %% [markdown]
# # Stable sets, defect and edge strength
#
# A weighted graph carries a positive integer on every vertex. Its stability
# number is the heaviest stable set; the defect compares that to half the
# total weight. Deleting an edge can only raise the stability number, and the
# amount it rises by is the strength of that edge.

# %%
from critgraph.graph import complete, cycle, path
from critgraph.stability import alpha, is_alpha_critical, is_critical_weighted, strength

c5 = cycle(5)
rep = alpha(c5)
print("alpha(C5) =", rep.alpha, " defect =", rep.defect)
for s in rep.max_stable_sets:
    print("  maximum stable set", s.members)

# %% [markdown]
# Every edge of an odd cycle has strength 1, so odd cycles are alpha-critical.
# A path on four vertices is not: its middle edge can go without changing
# anything.

# %%
print("C5 strengths:", strength(c5).strengths)
p4 = path(4)
print("P4 strengths:", strength(p4).strengths)
print("C7 alpha-critical:", is_alpha_critical(cycle(7)))
print("P4 alpha-critical:", is_alpha_critical(p4))

# %% [markdown]
# With weights the picture changes. Heavy vertices can make an edge redundant:
# in the triangle weighted (2, 1, 1) the edge between the light vertices has
# strength 0.

# %%
k3 = complete(3, [2, 1, 1])
print("strengths:", strength(k3).strengths)
print("critical:", is_critical_weighted(k3))
k3_heavy = complete(3, [2, 2, 2])
print("all-2 triangle strengths:", strength(k3_heavy).strengths)
