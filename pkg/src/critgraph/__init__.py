"""Exact tools for critical facet-graphs of the stable set polytope and
facet-defining graphs of the linear ordering polytope."""

from .analysis import AnalysisReport, analyze, analyze_graph, corpus_run
from .basis import BasisCatalog, SearchSpace, enumerate_basis, verify_basis_property
from .canon import canonical_form, canonical_key, isomorphic
from .config import LIMITS
from .errors import InconsistencyError, PreconditionError, SizeCapError
from .graph import (
    GraphDocument,
    GraphError,
    VertexSet,
    WeightedGraph,
    complete,
    cycle,
    parse_graph,
    path,
    serialize_graph,
    to_dot,
)
from .polytopes import (
    compute_gamma,
    fdg_certificate,
    graphical_inequality,
    is_cfg,
    is_facet_graph,
    is_fdg,
    is_one_cfg,
    lop_oracle,
)
from .stability import alpha, defect, is_alpha_critical, is_critical_weighted, stability_number, strength
from .tournament import build_dg, max_mono_admissible_tournament, normalize_for_dg
from .transforms import (
    elementary_odd_subdivision,
    reduce_cfg,
    shrink_once,
    shrink_to_basis,
    to_one_cfg,
    unit_odd_subdivision,
)
from .worth import beta, max_worth, sequence_bound, subdefect

__version__ = "0.1.0"
