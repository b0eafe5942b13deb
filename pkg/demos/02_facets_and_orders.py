# %% [markdown]
# # Facets of two polytopes
#
# For the stable set polytope the question is whether the maximum-weight
# stable sets span the whole space. For the linear ordering polytope the
# weighted graph is turned into an inequality over a doubled node set, and
# we ask whether the orders attaining it span a face of full dimension.
# Both checks are done in exact integer arithmetic.

# %%
from critgraph.graph import complete, cycle, triangles_sharing_edge
from critgraph.polytopes import (
    compute_gamma,
    fdg_certificate,
    graphical_inequality,
    is_facet_graph,
    is_fdg,
    lop_oracle,
)

for name, g in [("C5", cycle(5)), ("K4", complete(4)), ("C4", cycle(4))]:
    cert = is_facet_graph(g)
    print(f"{name}: rank {cert.matrix_rank}/{cert.required_rank} facet={cert.is_facet}")

# %% [markdown]
# The brute-force route lists all 720 orders of the six nodes of the triangle
# inequality, keeps the tight ones and measures their affine rank.

# %%
ineq = graphical_inequality(complete(3))
orc = lop_oracle(ineq)
print("max LHS", orc.max_value, "rhs", ineq.rhs)
print("tight orders", orc.tight_count, "affine rank", orc.matrix_rank, "of", orc.required_rank)
print("one tight order:", [ineq.node_ids[k] for k in orc.tight_objects[0].sequence])

# %% [markdown]
# The cheap route only needs the maximum worth sets. When the inequality is
# not a facet it returns a second solution of the tight system.

# %%
diamond = triangles_sharing_edge()
cert = fdg_certificate(diamond)
print("diamond: facet", cert.is_facet, "witness", cert.witness)
decision = is_fdg(cycle(5))
print("C5:", decision.mode, "verdict", decision.is_fdg, "routes agree", decision.agree)

# %% [markdown]
# With strengths as coefficients the right-hand side is the largest value
# any order reaches.

# %%
print("gamma(K4 all 2) =", compute_gamma(complete(4, [2, 2, 2, 2])))
