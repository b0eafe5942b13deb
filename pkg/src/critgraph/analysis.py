"""Whole-graph reports and batch runs over directories of graph documents.

Every predicate and bound is evaluated independently; a check that cannot
run (size cap, precondition) is recorded as skipped instead of aborting the
report.  Reports serialize deterministically so repeated runs are identical.
"""

from __future__ import annotations

import hashlib
import json
from collections.abc import Callable
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Any

from .canon import canonical_key
from .errors import InconsistencyError, PreconditionError, SizeCapError
from .graph import GraphError, WeightedGraph, connected, k2_cutsets, parse_graph
from .polytopes import FacetCertificate, is_facet_graph, is_fdg
from .stability import is_alpha_critical, is_critical_weighted, stability_number, strength
from .worth import max_worth, maximum_worth_sets


@dataclass
class Verdict:
    value: bool | None
    """``None`` when the check was skipped."""
    certificate: str | None = None
    note: str | None = None


@dataclass
class AnalysisReport:
    name: str
    canonical_hash: str
    n: int
    m: int
    alpha: int | None = None
    beta: int | None = None
    defect: int | None = None
    subdefect: int | None = None
    strengths: dict[str, int] | None = None
    verdicts: dict[str, Verdict] = field(default_factory=dict)
    bounds: dict[str, Verdict] = field(default_factory=dict)
    violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict[str, Any]:
        return asdict(self)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    def to_text(self) -> str:
        def fmt(v: Verdict) -> str:
            if v.value is None:
                return f"skipped ({v.note})"
            out = "yes" if v.value else "no"
            if v.certificate:
                out += f"  [{v.certificate}]"
            if v.note:
                out += f"  {v.note}"
            return out

        lines = [
            f"graph {self.name}  n={self.n} m={self.m}  hash={self.canonical_hash[:12]}",
            f"alpha={self.alpha} beta={self.beta} defect={self.defect} subdefect={self.subdefect}",
        ]
        if self.strengths is not None:
            lines.append("strengths: " + " ".join(f"{e}:{s}" for e, s in self.strengths.items()))
        for key, v in self.verdicts.items():
            lines.append(f"  {key:<15} {fmt(v)}")
        for key, v in self.bounds.items():
            lines.append(f"  bound {key:<12} {fmt(v)}")
        lines.append("violations: " + (", ".join(self.violations) if self.violations else "none"))
        return "\n".join(lines)


def canonical_hash(g: WeightedGraph) -> str:
    return hashlib.sha256(repr(canonical_key(g)).encode()).hexdigest()


def _cert_ref(c: FacetCertificate) -> str:
    return f"{c.kind} rank {c.matrix_rank}/{c.required_rank}"


def _guard(fn: Callable[[], Verdict]) -> Verdict:
    try:
        return fn()
    except SizeCapError as exc:
        return Verdict(None, note=str(exc))
    except (PreconditionError, GraphError) as exc:
        return Verdict(None, note=f"n/a: {exc}")


def _value(fn: Callable[[], Any]) -> Any:
    try:
        return fn()
    except (SizeCapError, PreconditionError, GraphError):
        return None


def _degree_bound(g: WeightedGraph, d: int) -> Verdict:
    """``deg(v) <= a(v) + d <= 2d`` everywhere, and ``deg(v) <= 2d - 1`` if ``d > 1``."""
    bad = []
    for i, deg in enumerate(g.degrees()):
        a = g.weights[i]
        if deg > a + d or a + d > 2 * d or (d > 1 and deg > 2 * d - 1):
            bad.append(g.ids[i])
    return Verdict(not bad, note=f"offending vertices {bad}" if bad else None)


def _four_traces(g: WeightedGraph) -> Verdict:
    sets = maximum_worth_sets(g)
    bad = []
    for i, j in g.edges:
        seen = {(t >> i & 1, t >> j & 1) for t in sets}
        if len(seen) < 4:
            bad.append(g.edge_label((i, j)))
    return Verdict(not bad, note=f"edges missing a trace {bad}" if bad else None)


def analyze_graph(g: WeightedGraph, name: str = "graph", oracle: bool | None = None) -> AnalysisReport:
    rep = AnalysisReport(name=name, canonical_hash=canonical_hash(g), n=g.n, m=g.m)
    rep.alpha = _value(lambda: stability_number(g))
    rep.beta = _value(lambda: max_worth(g))
    if rep.alpha is not None:
        rep.defect = g.total_weight - 2 * rep.alpha
    if rep.beta is not None:
        rep.subdefect = g.total_weight - 2 * rep.beta
    smap = _value(lambda: strength(g))
    if smap is not None:
        rep.strengths = {f"{u}-{v}": s for (u, v), s in smap.strengths.items()}

    v = rep.verdicts
    if g.is_unit():
        v["alpha_critical"] = _guard(lambda: Verdict(is_alpha_critical(g, require_connected=True)))
    else:
        v["alpha_critical"] = Verdict(None, note="n/a: weighted graph")
    v["critical"] = _guard(lambda: Verdict(is_critical_weighted(g)))

    def facet() -> Verdict:
        c = is_facet_graph(g)
        return Verdict(c.is_facet, _cert_ref(c))

    v["facet_graph"] = _guard(facet)
    crit, fac = v["critical"].value, v["facet_graph"].value
    if crit is None or fac is None:
        v["cfg"] = Verdict(None, note="needs criticality and facet verdicts")
        v["one_cfg"] = Verdict(None, note="needs the cfg verdict")
    else:
        v["cfg"] = Verdict(crit and fac)
        if not v["cfg"].value:
            v["one_cfg"] = Verdict(False)
        elif smap is None:
            v["one_cfg"] = Verdict(None, note="strengths unavailable")
        else:
            v["one_cfg"] = Verdict(all(s == 1 for s in smap.values()))

    def fdg() -> Verdict:
        d = is_fdg(g, oracle=oracle)
        ref = _cert_ref(d.certificate)
        if d.oracle is not None:
            ref += f"; {_cert_ref(d.oracle)}"
            if not d.agree:
                rep.violations.append("fdg: certificate and oracle disagree")
        return Verdict(d.is_fdg, ref, note=d.mode)

    v["fdg"] = _guard(fdg)

    b = rep.bounds
    if rep.alpha is not None and rep.beta is not None:
        b["subdefect_le_defect"] = Verdict(rep.subdefect <= rep.defect)
    if v["cfg"].value:
        b["degree_cfg"] = _degree_bound(g, rep.defect)
    if v["one_cfg"].value:
        b["one_cfg_equal"] = Verdict(rep.alpha == rep.beta and rep.defect == rep.subdefect)
    if v["fdg"].value:
        b["degree_fdg"] = _degree_bound(g, rep.subdefect)
        b["four_traces"] = _guard(lambda: _four_traces(g))
        b["min_degree"] = Verdict(min(g.degrees()) >= 2)
        b["no_k2_cutset"] = _guard(lambda: Verdict(connected(g) and not k2_cutsets(g)))

    for key, val in b.items():
        if val.value is False:
            rep.violations.append(f"bound {key}")
    if v["one_cfg"].value and not v["cfg"].value:
        rep.violations.append("one_cfg without cfg")
    if v["cfg"].value and not v["facet_graph"].value:
        rep.violations.append("cfg without facet_graph")
    if v["alpha_critical"].value and v["critical"].value is False:
        rep.violations.append("alpha_critical without critical")
    return rep


def analyze(path: str | Path, oracle: bool | None = None) -> AnalysisReport:
    """Parse a graph document and analyze it; parse errors propagate."""
    p = Path(path)
    doc = parse_graph(p.read_text())
    return analyze_graph(doc.graph, doc.name or p.stem, oracle)


# -- corpus runs -------------------------------------------------------


@dataclass
class CorpusReport:
    reports: list[AnalysisReport]
    errors: dict[str, str]
    """File name to parse or IO error message."""

    @property
    def violations(self) -> list[tuple[str, str]]:
        return [(r.name, msg) for r in self.reports for msg in r.violations]

    @property
    def exit_code(self) -> int:
        if self.violations:
            return 1
        return 2 if self.errors else 0

    def to_json(self) -> str:
        return json.dumps(
            {
                "reports": [r.to_dict() for r in self.reports],
                "errors": self.errors,
                "violations": [list(x) for x in self.violations],
            },
            indent=2,
            sort_keys=True,
        )

    def to_text(self) -> str:
        lines = [f"{'graph':<28} {'n':>3} {'defect':>6} {'subdef':>6}  cfg  1cfg fdg  status"]

        def mark(v: Verdict) -> str:
            return {True: "yes", False: "no", None: "-"}[v.value]

        for r in self.reports:
            lines.append(
                f"{r.name:<28} {r.n:>3} {str(r.defect):>6} {str(r.subdefect):>6}  "
                f"{mark(r.verdicts['cfg']):<4} {mark(r.verdicts['one_cfg']):<4} "
                f"{mark(r.verdicts['fdg']):<4} {'ok' if r.ok else 'VIOLATION'}"
            )
        for fname, msg in self.errors.items():
            lines.append(f"{fname:<28} unreadable: {msg}")
        lines.append(f"violations: {len(self.violations)}")
        for name, msg in self.violations:
            lines.append(f"  {name}: {msg}")
        return "\n".join(lines)


def _run_one(args: tuple[str, bool | None]) -> tuple[str, AnalysisReport | None, str | None]:
    path, oracle = args
    try:
        return path, analyze(path, oracle), None
    except (OSError, ValueError) as exc:
        return path, None, f"{type(exc).__name__}: {exc}"
    except InconsistencyError as exc:
        rep = AnalysisReport(name=Path(path).stem, canonical_hash="", n=0, m=0)
        rep.violations.append(f"inconsistency: {exc}")
        return path, rep, None


def corpus_run(directory: str | Path, oracle: bool | None = None, jobs: int = 1) -> CorpusReport:
    """Analyze every ``*.json`` file of ``directory`` in file-name order."""
    files = sorted(str(p) for p in Path(directory).glob("*.json"))
    work = [(f, oracle) for f in files]
    if jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(jobs) as pool:
            results = list(pool.map(_run_one, work))
    else:
        results = [_run_one(w) for w in work]
    reports, errors = [], {}
    for path, rep, err in results:
        if err is not None:
            errors[Path(path).name] = err
        else:
            reports.append(rep)
    return CorpusReport(reports, errors)
