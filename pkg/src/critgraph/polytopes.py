"""Facet tests for the stable set polytope and for graphical inequalities of
the linear ordering polytope.

Two independent routes decide whether a weighted graph is facet-defining
for the linear ordering polytope:

* :func:`lop_oracle` enumerates every linear order of ``V + V'``, keeps the
  orders tight for the inequality and computes the affine rank of their
  incidence vectors exactly;
* :func:`fdg_certificate` only looks at maximum worth sets and checks that
  the associated linear system has the trivial solution alone.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Literal, Sequence

import numpy as np

from .config import LIMITS, check_cap
from .errors import InconsistencyError, PreconditionError
from .graph import WeightedGraph, bits, connected
from .linalg import nullspace, rank, tall_rank
from .stability import is_critical_weighted, maximum_stable_sets, stability_number, strength
from .worth import max_worth, maximum_worth_sets


class InvalidInequalityError(ValueError):
    """Some linear order violates the inequality (its maximum exceeds the rhs)."""

    def __init__(self, max_value: int, rhs: int):
        super().__init__(f"inequality is not valid: max LHS {max_value} > rhs {rhs}")
        self.max_value = max_value
        self.rhs = rhs


@dataclass(frozen=True)
class FacetCertificate:
    kind: Literal["stab", "lop-system", "lop-oracle"]
    tight_objects: tuple
    """Tight stable sets / worth sets (as VertexSet), or for the oracle an
    affinely independent subset of the tight linear orders."""
    matrix_rank: int
    required_rank: int
    is_facet: bool
    witness: tuple[int, ...] | None = None
    rhs: int | None = None
    max_value: int | None = None
    tight_count: int | None = None

    def __post_init__(self) -> None:
        if self.is_facet != (self.matrix_rank == self.required_rank):
            raise InconsistencyError("facet flag disagrees with the rank comparison")


# -- stable set polytope ----------------------------------------------


def _require_graph(g: WeightedGraph, need_connected: bool = True) -> None:
    if g.n < 3:
        raise PreconditionError("weighted graphs need at least three vertices")
    if need_connected and not connected(g):
        raise PreconditionError("graph is disconnected")


def is_facet_graph(g: WeightedGraph) -> FacetCertificate:
    """Whether ``sum a(v) x_v <= alpha(G, a)`` is a facet of STAB(G).

    STAB(G) is full-dimensional and the tight hyperplane misses the origin,
    so facetness is equivalent to the maximum-weight stable sets having
    linear rank ``|V|``.
    """
    _require_graph(g)
    sets = maximum_stable_sets(g)
    rows = [[(m >> i) & 1 for i in range(g.n)] for m in sets]
    r = rank(rows)
    witness = None
    if r < g.n:
        z = nullspace(rows, g.n)[0]
        witness = tuple(a + d for a, d in zip(g.weights, z))
    return FacetCertificate(
        kind="stab",
        tight_objects=tuple(g.vertex_set(m) for m in sets),
        matrix_rank=r,
        required_rank=g.n,
        is_facet=r == g.n,
        witness=witness,
        rhs=stability_number(g),
    )


def is_cfg(g: WeightedGraph) -> bool:
    """Critical facet-graph: critical and facet-defining for STAB(G)."""
    return is_critical_weighted(g) and is_facet_graph(g).is_facet


def is_k_critical_cfg(g: WeightedGraph, k: int) -> bool:
    if not is_cfg(g):
        return False
    return all(s <= k for s in strength(g).values())


def is_one_cfg(g: WeightedGraph) -> bool:
    return is_k_critical_cfg(g, 1)


# -- graphical inequalities --------------------------------------------


@dataclass(frozen=True)
class GraphicalInequality:
    """``sum a(v) x_{vv'} - sum c(vw) (x_{vw'} + x_{wv'}) <= rhs`` on ``N = V + V'``.

    Node ``k < n`` is vertex ``k`` of the graph, node ``n + k`` its copy.
    """

    graph: WeightedGraph
    mode: Literal["unit", "strength"]
    edge_coefficients: tuple[int, ...]
    rhs: int | None

    @property
    def n_nodes(self) -> int:
        return 2 * self.graph.n

    @property
    def node_ids(self) -> tuple[str, ...]:
        return self.graph.ids + tuple(f"{v}'" for v in self.graph.ids)

    @property
    def vertex_coefficients(self) -> dict[tuple[str, str], int]:
        return {(v, f"{v}'"): a for v, a in zip(self.graph.ids, self.graph.weights)}

    def arc_coefficients(self) -> dict[tuple[int, int], int]:
        """Coefficient of ``x_{ij}`` for every ordered node pair with a nonzero one."""
        n = self.graph.n
        coeffs = {(v, n + v): a for v, a in enumerate(self.graph.weights)}
        for (v, w), c in zip(self.graph.edges, self.edge_coefficients):
            coeffs[(v, n + w)] = -c
            coeffs[(w, n + v)] = -c
        return coeffs

    def reduced(self) -> tuple[np.ndarray, int]:
        """Coefficients on ``x_{ij}``, ``i < j``, and the constant, using ``x_{ji} = 1 - x_{ij}``."""
        N = self.n_nodes
        pairs = pair_index(N)
        vec = np.zeros(len(pairs), dtype=np.int64)
        const = 0
        for (i, j), c in self.arc_coefficients().items():
            if i < j:
                vec[pairs[(i, j)]] += c
            else:
                vec[pairs[(j, i)]] -= c
                const += c
        return vec, const

    def evaluate(self, order: "LinearOrder | Sequence[int]") -> int:
        seq = order.sequence if isinstance(order, LinearOrder) else tuple(order)
        pos = {node: k for k, node in enumerate(seq)}
        return sum(c for (i, j), c in self.arc_coefficients().items() if pos[i] < pos[j])


def graphical_inequality(
    g: WeightedGraph, mode: Literal["unit", "strength"] = "unit"
) -> GraphicalInequality:
    if g.n < 3:
        raise PreconditionError("graphical inequalities need at least three vertices")
    if mode == "unit":
        return GraphicalInequality(g, "unit", (1,) * g.m, max_worth(g))
    if mode == "strength":
        s = strength(g)
        coeffs = tuple(s[(g.ids[i], g.ids[j])] for i, j in g.edges)
        return GraphicalInequality(g, "strength", coeffs, None)
    raise ValueError(f"unknown mode {mode!r}")


# -- linear orders -----------------------------------------------------


@lru_cache(maxsize=None)
def pair_index(n: int) -> dict[tuple[int, int], int]:
    return {p: k for k, p in enumerate((i, j) for i in range(n) for j in range(i + 1, n))}


@dataclass(frozen=True)
class LinearOrder:
    sequence: tuple[int, ...]
    incidence: tuple[int, ...] = field(repr=False)

    @classmethod
    def from_sequence(cls, seq: Sequence[int]) -> "LinearOrder":
        n = len(seq)
        pos = [0] * n
        for k, v in enumerate(seq):
            pos[v] = k
        inc = tuple(int(pos[i] < pos[j]) for i, j in pair_index(n))
        return cls(tuple(seq), inc)

    @classmethod
    def from_positions(cls, pos: Sequence[int]) -> "LinearOrder":
        seq = [0] * len(pos)
        for node, k in enumerate(pos):
            seq[int(k)] = node
        return cls.from_sequence(seq)


@lru_cache(maxsize=2)
def _all_position_arrays(n: int) -> np.ndarray:
    """Every permutation of ``range(n)`` as a row; used as node -> position maps."""
    p = np.zeros((1, 0), dtype=np.int8)
    for k in range(n):
        m = p.shape[0]
        new = np.empty((m * (k + 1), k + 1), dtype=np.int8)
        for slot in range(k + 1):
            block = new[slot * m : (slot + 1) * m]
            block[:, :slot] = p[:, :slot]
            block[:, slot] = k
            block[:, slot + 1 :] = p[:, slot:]
        p = new
    return p


def _scan_orders(vec: np.ndarray, const: int, n_nodes: int, chunk: int = 400_000):
    """Maximum of ``vec . x + const`` over all orders and the incidence rows attaining it."""
    positions = _all_position_arrays(n_nodes)
    pairs = list(pair_index(n_nodes))
    left = np.array([i for i, _ in pairs])
    right = np.array([j for _, j in pairs])
    best = None
    tight: list[np.ndarray] = []
    for start in range(0, positions.shape[0], chunk):
        pos = positions[start : start + chunk]
        x = (pos[:, left] < pos[:, right]).astype(np.int8)
        vals = x.astype(np.int64) @ vec + const
        top = int(vals.max())
        if best is None or top > best:
            best = top
            tight = []
        if top == best:
            tight.append(x[vals == best])
    rows = np.unique(np.concatenate(tight), axis=0)
    return best, rows


def lop_oracle(ineq: GraphicalInequality, max_nodes: int | None = None) -> FacetCertificate:
    """Brute-force facet test over all ``|N|!`` linear orders, in exact arithmetic."""
    N = ineq.n_nodes
    check_cap(N, LIMITS.oracle_max_nodes if max_nodes is None else max_nodes, "LOP oracle")
    vec, const = ineq.reduced()
    best, rows = _scan_orders(vec, const, N)
    rhs = best if ineq.rhs is None else ineq.rhs
    if best > rhs:
        raise InvalidInequalityError(best, rhs)
    dim = N * (N - 1) // 2
    if best < rhs:
        # valid but not even tight: no tight points at all
        return FacetCertificate("lop-oracle", (), 0, dim, False, None, rhs, best, 0)
    homog = np.hstack([rows, np.ones((rows.shape[0], 1), dtype=np.int8)])
    r, chosen = tall_rank(homog)
    witness = None
    if r < dim:
        own = np.append(vec, const - rhs)
        for z in nullspace([homog[i].tolist() for i in chosen], dim + 1):
            if rank([own.tolist(), z]) == 2:
                witness = tuple(z)
                break
    chosen_orders = tuple(LinearOrder.from_positions(_positions_from_incidence(rows[i], N)) for i in chosen)
    return FacetCertificate(
        kind="lop-oracle",
        tight_objects=chosen_orders,
        matrix_rank=r,
        required_rank=dim,
        is_facet=r == dim,
        witness=witness,
        rhs=rhs,
        max_value=best,
        tight_count=int(rows.shape[0]),
    )


def _positions_from_incidence(row: np.ndarray, n: int) -> list[int]:
    # position of node i = number of nodes preceding it
    before = [0] * n
    for (i, j), k in pair_index(n).items():
        if row[k]:
            before[j] += 1
        else:
            before[i] += 1
    return before


def fdg_certificate(g: WeightedGraph) -> FacetCertificate:
    """Uniqueness test for the system ``sum_{v in T} y_v + sum_{e in E(T)} y_e = beta``
    over maximum worth sets ``T``; unknowns are indexed by ``V`` then ``E``."""
    if g.n < 3:
        raise PreconditionError("weighted graphs need at least three vertices")
    sets = maximum_worth_sets(g)
    rows = []
    for t in sets:
        row = [(t >> i) & 1 for i in range(g.n)]
        row += [int((t >> i) & 1 and (t >> j) & 1) for i, j in g.edges]
        rows.append(row)
    ncols = g.n + g.m
    r = rank(rows)
    witness = None
    if r < ncols:
        z = nullspace(rows, ncols)[0]
        trivial = list(g.weights) + [-1] * g.m
        witness = tuple(t + d for t, d in zip(trivial, z))
    return FacetCertificate(
        kind="lop-system",
        tight_objects=tuple(g.vertex_set(m) for m in sets),
        matrix_rank=r,
        required_rank=ncols,
        is_facet=r == ncols,
        witness=witness,
        rhs=max_worth(g),
    )


@dataclass(frozen=True)
class FDGDecision:
    is_fdg: bool
    mode: Literal["oracle", "certificate-only"]
    certificate: FacetCertificate
    oracle: FacetCertificate | None

    @property
    def agree(self) -> bool | None:
        if self.oracle is None:
            return None
        return self.oracle.is_facet == self.certificate.is_facet

    def __bool__(self) -> bool:
        return self.is_fdg


def is_fdg(g: WeightedGraph, oracle: bool | None = None) -> FDGDecision:
    """Facet-defining-graph decision.

    ``oracle=None`` runs the brute-force oracle whenever ``2|V|`` is within
    the oracle cap and then takes it as ground truth; ``oracle=False`` uses
    the certificate alone; ``oracle=True`` insists on the oracle.
    """
    cert = fdg_certificate(g)
    run_oracle = oracle if oracle is not None else 2 * g.n <= LIMITS.oracle_max_nodes
    if run_oracle:
        orc = lop_oracle(graphical_inequality(g, "unit"))
        return FDGDecision(orc.is_facet, "oracle", cert, orc)
    return FDGDecision(cert.is_facet, "certificate-only", cert, None)


def gamma_by_sets(g: WeightedGraph) -> int:
    """``max_T a(T) - sum_{e in E(T)} s(e)``: the maximum of the strength-weighted
    left-hand side, attained by orders that put ``T`` before its copies."""
    check_cap(g.n, LIMITS.enumerate_max_n, "gamma by subsets")
    s = strength(g)
    coeff = [s[(g.ids[i], g.ids[j])] for i, j in g.edges]
    best = 0
    for mask in range(1 << g.n):
        val = g.weight_of(mask) - sum(
            c for (i, j), c in zip(g.edges, coeff) if (mask >> i) & 1 and (mask >> j) & 1
        )
        best = max(best, val)
    return best


def compute_gamma(g: WeightedGraph, method: Literal["orders", "sets"] = "orders") -> int:
    """Right-hand side making the strength-weighted inequality valid and tight."""
    if not is_cfg(g):
        raise PreconditionError("gamma is defined for critical facet-graphs")
    if method == "orders":
        ineq = graphical_inequality(g, "strength")
        check_cap(ineq.n_nodes, LIMITS.oracle_max_nodes, "gamma over linear orders")
        vec, const = ineq.reduced()
        value, _ = _scan_orders(vec, const, ineq.n_nodes)
    else:
        value = gamma_by_sets(g)
    if all(s == 1 for s in strength(g).values()) and value != max_worth(g):
        raise InconsistencyError(f"1-critical facet-graph with gamma {value} != beta {max_worth(g)}")
    return value
