# %% [markdown]
# # Coloured digraphs and tournaments
#
# An alpha-critical graph is first normalized: vertices of degree four or
# more are split, and edges between degree-3 vertices are subdivided. Each
# degree-3 vertex then contributes three digraph vertices (its edges), and
# arcs between them are coloured by how chosen stable sets meet the other
# degree-3 vertices. Monochromatic acyclic tournaments using at most one
# vertex per triple never exceed the defect.

# %%
import itertools
import random

from critgraph.graph import complete
from critgraph.stability import defect
from critgraph.tournament import (
    a_sequence,
    blow_up,
    build_dg,
    has_admissible_tournament,
    max_mono_admissible_tournament,
    normalize_for_dg,
    transitive_tournament,
)

g = normalize_for_dg(complete(5))
print("normalized K5:", g.n, "vertices, defect", defect(g))
rng = random.Random(7)
for k in range(5):
    d = build_dg(g, None if k == 0 else rng)
    size, witness, color = max_mono_admissible_tournament(d)
    print(f"  selection {k}: {len(d.arcs)} arcs, largest {color} tournament {size}: {witness}")

# %% [markdown]
# Blow-ups triple every vertex and fan each arc out from a chosen subset of
# copies. Every blow-up of a transitive tournament of order a_k contains an
# admissible tournament of order k.

# %%
print("a_k:", [a_sequence(k) for k in range(1, 5)])
t = transitive_tournament(a_sequence(2))
subsets = [s for r in (1, 2, 3) for s in itertools.combinations((1, 2, 3), r)]
choice = {arc: rng.choice(subsets) for arc in t.arcs}
print("random blow-up of the order-4 tournament has an order-2 one:",
      has_admissible_tournament(blow_up(t, choice).result, 2))
