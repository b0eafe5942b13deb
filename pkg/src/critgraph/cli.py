"""The ``critgraph`` command.

Exit status: 0 when everything ran and every checked invariant held, 1 when
a mathematical invariant failed, 2 for usage, input or size-cap errors.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import random
import sys
from pathlib import Path
from typing import Any

from . import polytopes, stability, transforms, worth
from .analysis import analyze, corpus_run
from .basis import SearchSpace, enumerate_basis
from .config import LIMITS
from .corpus import corpus_dir
from .errors import InconsistencyError, PreconditionError, SizeCapError
from .graph import GraphError, WeightedGraph, graph_to_dict, parse_graph, to_dot
from .polytopes import FacetCertificate, InvalidInequalityError
from .tournament import build_dg, max_mono_admissible_tournament, normalize_for_dg

log = logging.getLogger("critgraph")


class Failure(Exception):
    """An invariant checked by a subcommand did not hold."""


def _env_default(name: str, default: Any) -> Any:
    raw = os.environ.get(f"CRITGRAPH_{name}")
    if raw is None:
        return default
    return type(default)(raw) if default is not None else raw


def _load(path: str) -> WeightedGraph:
    return parse_graph(Path(path).read_text()).graph


def _sets(g: WeightedGraph, masks) -> list[list[str]]:
    return [list(g.vertex_set(m).members) for m in masks]


def _certificate(c: FacetCertificate) -> dict[str, Any]:
    out: dict[str, Any] = {
        "kind": c.kind,
        "is_facet": c.is_facet,
        "rank": c.matrix_rank,
        "required_rank": c.required_rank,
        "rhs": c.rhs,
    }
    if c.kind == "lop-oracle":
        out["tight_orders"] = c.tight_count
        out["max_value"] = c.max_value
        out["independent_orders"] = [list(o.sequence) for o in c.tight_objects]
    else:
        out["tight_sets"] = [list(t.members) for t in c.tight_objects]
    if c.witness is not None:
        out["witness"] = list(c.witness)
    return out


def _emit(args: argparse.Namespace, payload: Any, text: str | None = None) -> None:
    if args.format == "json" or text is None:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(text)


def _kv_text(payload: dict[str, Any]) -> str:
    return "\n".join(f"{k}: {json.dumps(v) if isinstance(v, (list, dict)) else v}" for k, v in payload.items())


# -- subcommands -------------------------------------------------------


def cmd_alpha(args: argparse.Namespace) -> int:
    g = _load(args.file)
    rep = stability.alpha(g)
    payload = {
        "alpha": rep.alpha,
        "defect": rep.defect,
        "strengths": {f"{u}-{v}": s for (u, v), s in stability.strength(g).strengths.items()},
        "max_stable_sets": [list(s.members) for s in rep.max_stable_sets],
    }
    _emit(args, payload, _kv_text(payload))
    return 0


def cmd_beta(args: argparse.Namespace) -> int:
    g = _load(args.file)
    rep = worth.beta(g)
    payload = {
        "beta": rep.beta,
        "subdefect": rep.subdefect,
        "max_worth_sets": [list(s.members) for s in rep.max_worth_sets],
    }
    _emit(args, payload, _kv_text(payload))
    return 0


def cmd_subdefect(args: argparse.Namespace) -> int:
    g = _load(args.file)
    payload = {"subdefect": worth.subdefect(g), "defect": stability.defect(g)}
    _emit(args, payload, _kv_text(payload))
    return 0


def cmd_strength(args: argparse.Namespace) -> int:
    g = _load(args.file)
    smap = stability.strength(g)
    payload = {f"{u}-{v}": s for (u, v), s in smap.strengths.items()}
    _emit(args, payload, "\n".join(f"{e} {s}" for e, s in payload.items()))
    return 0


def cmd_check(args: argparse.Namespace) -> int:
    g = _load(args.file)
    what = args.property
    payload: dict[str, Any] = {"property": what}
    if what == "alpha-critical":
        payload["holds"] = stability.is_alpha_critical(g)
    elif what == "critical":
        payload["holds"] = stability.is_critical_weighted(g)
    elif what == "facet-graph":
        c = polytopes.is_facet_graph(g)
        payload["holds"] = c.is_facet
        payload["certificate"] = _certificate(c)
    elif what == "cfg":
        payload["holds"] = polytopes.is_cfg(g)
    elif what == "one-cfg":
        payload["holds"] = polytopes.is_one_cfg(g)
    else:
        d = polytopes.is_fdg(g, oracle=True if args.oracle else None)
        payload["holds"] = d.is_fdg
        payload["mode"] = d.mode
        payload["certificate"] = _certificate(d.certificate)
        if d.oracle is not None:
            payload["oracle"] = _certificate(d.oracle)
            if not d.agree:
                _emit(args, payload)
                raise Failure("certificate and oracle disagree")
    _emit(args, payload, f"{what}: {'yes' if payload['holds'] else 'no'}")
    return 0


def cmd_gamma(args: argparse.Namespace) -> int:
    g = _load(args.file)
    value = polytopes.compute_gamma(g, args.method)
    _emit(args, {"gamma": value, "method": args.method}, f"gamma: {value}")
    return 0


def cmd_inequality(args: argparse.Namespace) -> int:
    g = _load(args.file)
    ineq = polytopes.graphical_inequality(g, args.mode)
    names = ineq.node_ids
    rhs = ineq.rhs if ineq.rhs is not None else polytopes.compute_gamma(g)
    payload = {
        "mode": ineq.mode,
        "nodes": list(names),
        "coefficients": {f"{names[i]}<{names[j]}": c for (i, j), c in sorted(ineq.arc_coefficients().items())},
        "rhs": rhs,
    }
    terms = " ".join(f"{'+' if c > 0 else '-'} {abs(c)} x[{k}]" for k, c in payload["coefficients"].items())
    _emit(args, payload, f"{terms} <= {rhs}")
    return 0


def _edge_pairs(raw: list[str] | None) -> list[tuple[str, str]]:
    out = []
    for item in raw or []:
        parts = item.split(",")
        if len(parts) != 2:
            raise GraphError(f"edge {item!r} must be given as u,v")
        out.append((parts[0], parts[1]))
    return out


def cmd_transform(args: argparse.Namespace) -> int:
    g = _load(args.file)
    edges = _edge_pairs(args.edge)
    op = args.operation
    oracle = True if args.oracle else False
    if op == "subdivide":
        targets = edges or g.edge_ids()
        out = transforms.unit_odd_subdivision(g, {e: args.length for e in targets})
    elif op == "elementary":
        out = transforms.elementary_odd_subdivision(g, edges or g.edge_ids())
    elif op == "shrink":
        if len(edges) != 1:
            raise PreconditionError("shrink takes exactly one --edge")
        out = transforms.shrink_once(g, *edges[0])
    elif op == "to-one-cfg":
        out = transforms.to_one_cfg(g, oracle=oracle)
    else:
        out = transforms.shrink_to_basis(g, oracle=oracle)
    print(json.dumps(graph_to_dict(out), indent=2))
    return 0


def cmd_enumerate(args: argparse.Namespace) -> int:
    space = SearchSpace(args.target, args.defect, args.max_n, primitive=not args.all_weights)
    cat = enumerate_basis(space, jobs=args.jobs)
    if args.format == "json":
        payload = {
            "summary": {
                "target": space.target,
                "defect": space.defect,
                "max_n": space.max_vertices,
                "count": len(cat.members),
                "count_by_order": {str(k): v for k, v in cat.count_by_order().items()},
                "structures_examined": cat.structures_examined,
            },
            "catalog": [
                graph_to_dict(m.graph, f"{space.target}-d{space.defect}-{k}",
                              defect=m.defect, subdefect=m.subdefect, certificate=m.certificate)
                for k, m in enumerate(cat.members)
            ],
        }
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(cat.summary())
        for m in cat.members:
            print(f"  n={m.graph.n} weights={list(m.graph.weights)} edges={[list(e) for e in m.graph.edges]}")
    return 0


def _prepare_dg(g: WeightedGraph) -> WeightedGraph:
    deg = g.degrees()
    normal = max(deg, default=0) == 3 and not any(deg[i] == 3 and deg[j] == 3 for i, j in g.edges)
    return g if normal else normalize_for_dg(g)


def cmd_dg(args: argparse.Namespace) -> int:
    g = _prepare_dg(_load(args.file))
    if args.action == "build":
        rng = random.Random(args.seed) if args.seed is not None else None
        d = build_dg(g, rng)
        if args.format == "json":
            print(json.dumps({"digraph": d.to_dict(), "dot": d.to_dot()}, indent=2, sort_keys=True))
        else:
            print(d.to_dot(), end="")
        return 0
    delta = stability.defect(g)
    rng = random.Random(args.seed if args.seed is not None else 0)
    rows = []
    for k in range(args.samples):
        d = build_dg(g, None if k == 0 else rng)
        size, witness, color = max_mono_admissible_tournament(d)
        rows.append({"sample": k, "size": size, "color": color, "witness": witness})
    worst = max(r["size"] for r in rows)
    payload = {"defect": delta, "max_size": worst, "holds": worst <= delta, "samples": rows}
    _emit(args, payload, f"defect {delta}; largest monochromatic admissible tournament {worst} "
                         f"over {args.samples} selections: {'ok' if worst <= delta else 'VIOLATED'}")
    if worst > delta:
        raise Failure(f"tournament of order {worst} exceeds defect {delta}")
    return 0


def cmd_analyze(args: argparse.Namespace) -> int:
    rep = analyze(args.file, oracle=True if args.oracle else None)
    print(rep.to_json() if args.format == "json" else rep.to_text())
    return 0 if rep.ok else 1


def cmd_corpus(args: argparse.Namespace) -> int:
    directory = args.directory or corpus_dir()
    if not Path(directory).is_dir():
        raise FileNotFoundError(f"no such directory: {directory}")
    rep = corpus_run(directory, oracle=True if args.oracle else None, jobs=args.jobs)
    print(rep.to_json() if args.format == "json" else rep.to_text())
    return rep.exit_code


def cmd_export_dot(args: argparse.Namespace) -> int:
    doc = parse_graph(Path(args.file).read_text())
    print(to_dot(doc.graph, doc.name or Path(args.file).stem), end="")
    return 0


def cmd_lemma15(args: argparse.Namespace) -> int:
    g = _load(args.file)
    raw = args.sets
    if not raw.lstrip().startswith("["):
        raw = Path(raw).read_text()
    sets = json.loads(raw)
    res = worth.sequence_bound(g, sets)
    payload = {
        "bound": res.bound,
        "defect": res.defect,
        "x_sets": [list(x.members) for x in res.x_sets],
    }
    _emit(args, payload, f"bound {res.bound} <= defect {res.defect}")
    return 0


# -- parser ------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default=_env_default("FORMAT", "json"))
    common.add_argument("--max-n", type=int, default=None,
                        help="cap on vertex count for exhaustive set enumeration")
    common.add_argument("-v", "--verbose", action="store_true")

    p = argparse.ArgumentParser(prog="critgraph", description=__doc__.splitlines()[0] if __doc__ else None)
    sub = p.add_subparsers(dest="command", required=True)

    def graph_cmd(name: str, fn, help_: str) -> argparse.ArgumentParser:
        sp = sub.add_parser(name, parents=[common], help=help_)
        sp.add_argument("file")
        sp.set_defaults(func=fn)
        return sp

    graph_cmd("alpha", cmd_alpha, "stability number, defect, strengths, maximum stable sets")
    graph_cmd("beta", cmd_beta, "maximum worth and maximum worth sets")
    graph_cmd("subdefect", cmd_subdefect, "subdefect and defect")
    graph_cmd("strength", cmd_strength, "edge strengths")

    sp = sub.add_parser("check", parents=[common], help="decide a graph property")
    sp.add_argument("property", choices=("alpha-critical", "critical", "facet-graph", "cfg", "one-cfg", "fdg"))
    sp.add_argument("file")
    sp.add_argument("--oracle", action="store_true", help="force the brute-force LOP oracle")
    sp.set_defaults(func=cmd_check)

    sp = graph_cmd("gamma", cmd_gamma, "right-hand side of the strength-weighted inequality")
    sp.add_argument("--method", choices=("orders", "sets"), default="orders")

    sp = graph_cmd("inequality", cmd_inequality, "emit the graphical inequality")
    sp.add_argument("--mode", choices=("unit", "strength"), default="unit")

    sp = sub.add_parser("transform", parents=[common], help="subdivide or shrink")
    sp.add_argument("operation", choices=("subdivide", "elementary", "shrink", "to-one-cfg", "shrink-to-basis"))
    sp.add_argument("file")
    sp.add_argument("--edge", action="append", metavar="U,V", help="target edge (repeatable)")
    sp.add_argument("--length", type=int, default=3, help="odd path length for subdivide")
    sp.add_argument("--oracle", action="store_true")
    sp.set_defaults(func=cmd_transform)

    sp = sub.add_parser("enumerate", parents=[common], help="enumerate a basis at fixed (sub)defect")
    sp.add_argument("--target", choices=("cfg", "fdg"), required=True)
    sp.add_argument("--defect", type=int, required=True)
    sp.add_argument("--jobs", type=int, default=_env_default("JOBS", 1))
    sp.add_argument("--all-weights", action="store_true",
                    help="cfg: keep weightings with a common factor")
    sp.set_defaults(func=cmd_enumerate)

    sp = sub.add_parser("dg", parents=[common], help="coloured digraph of a normalized alpha-critical graph")
    sp.add_argument("action", choices=("build", "check"))
    sp.add_argument("file")
    sp.add_argument("--seed", type=int, default=None, help="random choice of the stable sets")
    sp.add_argument("--samples", type=int, default=10, help="check: number of stable set selections")
    sp.set_defaults(func=cmd_dg)

    sp = graph_cmd("analyze", cmd_analyze, "run every applicable check")
    sp.add_argument("--oracle", action="store_true")

    sp = sub.add_parser("corpus", parents=[common], help="analyze every graph document in a directory")
    sp.add_argument("directory", nargs="?", help="defaults to the bundled corpus")
    sp.add_argument("--oracle", action="store_true")
    sp.add_argument("--jobs", type=int, default=_env_default("JOBS", 1))
    sp.set_defaults(func=cmd_corpus)

    graph_cmd("export-dot", cmd_export_dot, "Graphviz rendering")

    sp = graph_cmd("lemma15", cmd_lemma15, "sequence bound for a covering sequence of maximum worth sets")
    sp.add_argument("--sets", required=True, help="JSON list of id lists, or a file holding one")
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    saved_cap = LIMITS.enumerate_max_n
    if args.command == "enumerate":
        args.max_n = args.max_n if args.max_n is not None else LIMITS.basis_max_n
    elif args.max_n is not None:
        LIMITS.enumerate_max_n = args.max_n
    try:
        return args.func(args)
    except (Failure, InconsistencyError, InvalidInequalityError) as exc:
        print(f"critgraph: invariant failed: {exc}", file=sys.stderr)
        return 1
    except (OSError, json.JSONDecodeError, GraphError, PreconditionError, SizeCapError) as exc:
        print(f"critgraph: error: {exc}", file=sys.stderr)
        return 2
    finally:
        # the override applies to this invocation only
        LIMITS.enumerate_max_n = saved_cap


if __name__ == "__main__":
    sys.exit(main())
