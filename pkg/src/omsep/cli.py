"""omsep command line: JSON reports on separated collections, tilings and purity."""
from __future__ import annotations

import argparse
import hashlib
import json
import math
import os
import sys
from dataclasses import asdict, dataclass, field
from pathlib import Path

from . import construct, graphsep, separation, tilings
from .core import OrientedMatroid, SignedSet, bits, is_isomorphic, matroid_from_json, validate_axioms
from .errors import OMError, ResourceLimit, ValidationError

EXIT_OK, EXIT_LIMIT, EXIT_INVALID = 0, 2, 3

CORANK2_COMPOSITIONS = [(1, 1, 1, 1, 1, 1), (2, 1, 1, 1, 1), (2, 2, 1, 1), (2, 2, 2),
                        (3, 1, 1, 1), (2, 1, 2, 1), (3, 2, 1), (3, 3)]


@dataclass
class RunConfig:
    command: str
    inputs: list[str] = field(default_factory=list)
    max_colocalizations: int = tilings.MAX_COLOCALIZATIONS
    max_cliques: int = tilings.MAX_CLIQUES
    time_budget: float = 300.0
    output: str | None = None
    seed: int = 0
    threads: int | None = None

    def __post_init__(self):
        if self.max_colocalizations <= 0 or self.max_cliques <= 0 or self.time_budget <= 0:
            raise ValueError("limits must be positive")


class Source:
    """Whatever the input flags describe: a matroid, maybe a graph or a triangulation."""

    def __init__(self, matroid: OrientedMatroid, tag: str, raw: bytes, *, graph=None, triangulation=None,
                 rank2_alternating: int | None = None, figure: str | None = None):
        self.matroid = matroid
        self.tag = tag
        self.raw = raw
        self.graph = graph
        self.triangulation = triangulation
        self.rank2_alternating = rank2_alternating
        self.figure = figure


def _load_file(path: str) -> Source:
    raw = Path(path).read_bytes()
    try:
        data = json.loads(raw)
    except json.JSONDecodeError as e:
        raise ValidationError(f"{path}: not JSON ({e})") from e
    if "polygon" in data:
        tri = graphsep.Triangulation.from_json(data)
        g = tri.graph()
        return Source(g.matroid(), path, raw, graph=g, triangulation=tri)
    if "vertices" in data:
        g = graphsep.UndirectedGraph.from_json(data)
        return Source(g.matroid(), path, raw, graph=g)
    if "columns" in data:
        return Source(construct.from_vectors(construct.VectorConfiguration.from_json(data)), path, raw)
    if "elements" in data:
        m = matroid_from_json(data, validate=False)
        rep = _validate_data(data)
        if not rep.ok:
            raise ValidationError(f"{path}: {rep.summary()}", rep)
        return Source(m, path, raw)
    raise ValidationError(f"{path}: unrecognized input format")


def load_source(args) -> Source:
    if getattr(args, "file", None):
        return _load_file(args.file)
    if getattr(args, "graph", None):
        return _load_file(args.graph)
    if getattr(args, "alternating", None):
        n, d = args.alternating
        return Source(construct.alternating(n, d), f"alternating {n} {d}", f"alternating {n} {d}".encode(),
                      rank2_alternating=n if d == 2 else None)
    if getattr(args, "free", None) is not None:
        return Source(construct.free(args.free), f"free {args.free}", f"free {args.free}".encode())
    if getattr(args, "figure", None):
        return Source(construct.figure_matroid(args.figure), args.figure, args.figure.encode(), figure=args.figure)
    if getattr(args, "corank2", None):
        alpha = tuple(int(x) for x in args.corank2.split(","))
        tag = "corank2 " + ",".join(map(str, alpha))
        return Source(construct.corank2_family(alpha), tag, tag.encode())
    raise ValidationError("no input given")


def _add_input(p: argparse.ArgumentParser) -> None:
    p.add_argument("file", nargs="?", help="matroid, vector, graph or triangulation JSON")
    p.add_argument("--alternating", nargs=2, type=int, metavar=("N", "D"))
    p.add_argument("--free", type=int, metavar="N")
    p.add_argument("--graph", metavar="FILE")
    p.add_argument("--figure", metavar="NAME", help="e.g. IC(6,3,13)")
    p.add_argument("--corank2", metavar="A,B,...", help="composition for the rank-4 corank-2 family")


def _names(m: OrientedMatroid, s: int) -> str:
    return "".join(m.names(s)) if all(len(l) == 1 for l in m.labels) else ",".join(m.names(s))


# ---------------------------------------------------------------- commands

def _raw_circuits(data: dict) -> list[SignedSet]:
    pos = {str(lab): i for i, lab in enumerate(data["elements"])}
    out = []
    for c in data.get("circuits", []):
        out.append(SignedSet(sum(1 << pos[str(v)] for v in c.get("plus", [])),
                             sum(1 << pos[str(v)] for v in c.get("minus", []))))
    return out


def _validate_data(data: dict):
    """Files list one circuit per +- pair; the axioms are checked on the closure under negation."""
    raw = _raw_circuits(data)
    return validate_axioms(set(raw) | {-x for x in raw}, len(data["elements"]))


def cmd_validate(args, cfg: RunConfig) -> tuple[dict, int]:
    data = json.loads(Path(args.file).read_bytes())
    labels = [str(x) for x in data["elements"]]
    rep = _validate_data(data)
    failures = {k: _witness_json(v, labels) for k, v in rep.failures.items()}
    return {"valid": rep.ok, "failures": failures, "elements": len(labels),
            "circuits": len(_raw_circuits(data))}, (EXIT_OK if rep.ok else EXIT_INVALID)


def _witness_json(w, labels):
    if isinstance(w, SignedSet):
        return {"plus": [labels[i] for i in bits(w.plus)], "minus": [labels[i] for i in bits(w.minus)]}
    if isinstance(w, (list, tuple)):
        return [_witness_json(x, labels) for x in w]
    if isinstance(w, dict):
        return {str(k): _witness_json(v, labels) for k, v in w.items()}
    return w if isinstance(w, (int, str, float, type(None))) else str(w)


def cmd_analyze(src: Source, cfg: RunConfig) -> dict:
    m = src.matroid
    out = {
        "elements": list(m.labels),
        "rank": m.rank,
        "ind": m.tutte_eval(2, 1),
        "bases": m.tutte_eval(1, 1),
        "loops": m.names(m.loops),
        "coloops": m.names(m.coloops),
        "simple": m.is_simple,
        "circuits": len(m.circuits),
    }
    if src.graph is not None:
        out["forests"] = out["ind"]
        out["acyclic"] = m.tutte_eval(2, 0)
    if m.rank == 3 and m.n <= 8:
        out["positroid"] = bool(construct.is_positively_orientable(m))
    return out


def tiling_svg(n: int, sets, tiles) -> str:
    size = 800
    vs = [(math.cos(math.pi * i / (n + 1)), math.sin(math.pi * i / (n + 1))) for i in range(n, 0, -1)]
    xs = [sum(vs[i][0] for i in bits(s)) for s in range(1 << n)]
    ys = [sum(vs[i][1] for i in bits(s)) for s in range(1 << n)]
    span = max(max(xs) - min(xs), max(ys) - min(ys)) or 1.0
    scale = (size - 80) / span
    x0 = (size - (max(xs) - min(xs)) * scale) / 2 - min(xs) * scale

    def pt(s):
        return round(x0 + xs[s] * scale), round(size - 40 - ys[s] * scale)

    lines = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" viewBox="0 0 {size} {size}">',
             '<rect width="100%" height="100%" fill="white"/>']
    for t in tiles:
        if t.dim != 2:
            continue
        a, b = bits(t.span)
        ring = [t.plus, t.plus | 1 << a, t.plus | 1 << a | 1 << b, t.plus | 1 << b]
        pts = " ".join("%d,%d" % pt(s) for s in ring)
        lines.append(f'<polygon points="{pts}" fill="#dde7f3" stroke="black" stroke-width="2"/>')
    for s in sorted(sets):
        x, y = pt(s)
        lines.append(f'<circle cx="{x}" cy="{y}" r="5" fill="black"/>')
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def cmd_tilings(src: Source, cfg: RunConfig, args) -> dict:
    m = src.matroid
    limit = args.limit if args.limit is not None else cfg.max_colocalizations
    colls = []
    svgs = []
    for k, sigma in enumerate(tilings.enumerate_colocalizations(m, limit=limit, time_budget=cfg.time_budget)):
        sets = separation.collection_of(m, sigma)
        tiles = tilings.tiling_of(m.n, sets)
        colls.append({"size": len(sets), "sets": [_names(m, s) for s in sets],
                      "tiles": [t.to_json(m.labels) for t in tiles]})
        if args.svg and src.rank2_alternating is not None:
            d = Path(args.svg)
            d.mkdir(parents=True, exist_ok=True)
            f = d / f"tiling_{k:04d}.svg"
            f.write_text(tiling_svg(m.n, sets, tiles))
            svgs.append(f.name)
    out = {"count": len(colls), "ind": m.tutte_eval(2, 1), "collections": colls,
           "limit_reached": len(colls) >= limit}
    if args.svg:
        out["svg"] = svgs if src.rank2_alternating is not None else "svg skipped: input is not rank-2 alternating"
    return out


def _domain(m: OrientedMatroid, text: str) -> list[int]:
    comps = tilings.mutation_components(m)
    if text.startswith("size:"):
        k = int(text[5:])
        for c in comps:
            if len(c) == k:
                return c
        raise ValidationError(f"no mutation component of size {k}")
    if text.startswith("component:"):
        ordered = sorted(comps, key=lambda c: (-len(c), c))
        return ordered[int(text[10:])]
    data = json.loads(Path(text).read_text())
    return list(separation.collection_from_json(m, data))


def cmd_purity(src: Source, cfg: RunConfig, args) -> dict:
    m = src.matroid
    if args.domain:
        dom = _domain(m, args.domain)
        res = tilings.domain_purity_check(m, dom, cap=cfg.max_cliques)
        out = res.to_json(m)
        out["domain_size"] = len(dom)
        return out
    return tilings.purity_check(m, cap=cfg.max_cliques).to_json(m)


def cmd_mutation_graph(src: Source, cfg: RunConfig) -> dict:
    m = src.matroid
    comps = tilings.mutation_components(m)
    out = {"vertices": 1 << m.n, "sizes": sorted(len(c) for c in comps),
           "isolated": sum(1 for c in comps if len(c) == 1),
           "components": [[_names(m, s) for s in c] for c in comps if len(c) > 1]}
    if src.graph is not None:
        g = src.graph
        rev = graphsep.cycle_reversal_components(g)
        out["cycle_reversal_components"] = len(rev)
        out["polytopal"] = all(graphsep.polytopality_check(g, c).ok for c in rev if len(c) > 1)
    return out


def cmd_flips(src: Source, cfg: RunConfig) -> dict:
    m = src.matroid
    g = tilings.flip_graph(m, cap=cfg.max_colocalizations)
    edges = sum(len(v) for v in g.values()) // 2
    bad = [s for s in g for i, _ in tilings.flip_neighbors(m, s) if not tilings.flip_relation_holds(m, s, i)]
    return {"colocalizations": len(g), "flip_edges": edges, "connected": tilings.is_flip_connected(m),
            "mutation_relation_failures": len(bad)}


def _figure_certificates() -> list[tuple[str, OrientedMatroid, tilings.Certificate]]:
    out = []
    for name, fig in construct.NON_POSITROID_FIGURES.items():
        m = construct.figure_matroid(name)
        plus, minus = fig["circuit"]
        c = SignedSet(m.mask(plus), m.mask(minus))
        cert = tilings.bad_collection_certificate(m, c, [m.mask(s) for s in fig["collection"]])
        out.append((name, m, cert))
    return out


def cmd_census6(cfg: RunConfig) -> dict:
    classes = construct.census_rank3_simple(6)
    figs = _figure_certificates()
    rows = []
    for k, m in enumerate(classes):
        pos = bool(construct.is_positively_orientable(m))
        pur = tilings.purity_check(m, cap=cfg.max_cliques)
        row = {"index": k, "positively_orientable": pos, "pure": pur.pure,
               "min_clique": pur.min_size, "ind": pur.ind}
        for name, fm, cert in figs:
            if is_isomorphic(m, fm):
                row["figure"] = name
                row["certificate_valid"] = cert.valid
        rows.append(row)
    return {"classes": len(classes), "positively_orientable": sum(r["positively_orientable"] for r in rows),
            "pure": sum(r["pure"] for r in rows), "rows": rows,
            "certificates_valid": all(c.valid for _, _, c in figs)}


def cmd_corank2_table(cfg: RunConfig) -> dict:
    rows = []
    for alpha in CORANK2_COMPOSITIONS:
        m = construct.corank2_family(alpha)
        res = tilings.purity_check(m, cap=cfg.max_cliques)
        rows.append({"composition": list(alpha), "rank": m.rank, "pure": res.pure,
                     "ind": res.ind, "min_clique": res.min_size})
    return {"rows": rows, "not_pure": sum(1 for r in rows if not r["pure"])}


def cmd_outerplanar(src: Source, cfg: RunConfig, args) -> dict:
    if src.graph is None:
        raise ValidationError("outerplanar needs a graph or triangulation input")
    ok, minor, branch = graphsep.outerplanar(src.graph, witness=True)
    out = {"outerplanar": ok, "minor": minor, "branch_sets": branch}
    if args.purity:
        out["pure"] = tilings.purity_check(src.matroid, cap=cfg.max_cliques).pure
    return out


def cmd_coherent(cfg: RunConfig, args) -> dict:
    if args.tree:
        tri = graphsep.Triangulation.from_json(json.loads(Path(args.tree).read_text()))
        tree = graphsep.tree_of_triangulation(tri)
        formula = None
    else:
        tree = graphsep.t_ab(args.a, args.b)
        formula = graphsep.coherent_count(args.a, args.b)
    s = graphsep.all_coherent_check(tree, limit=cfg.max_colocalizations)
    out = {"triangles": tree.size, "subtrees": len(tree.subtrees()), "colocalizations": s.colocalizations,
           "coherent": s.coherent, "all_coherent": s.all_coherent, "formula": formula,
           "limit_reached": s.colocalizations >= cfg.max_colocalizations}
    if formula is not None:
        out["formula_matches"] = formula == s.colocalizations
    if s.first_incoherent is not None:
        out["first_incoherent"] = graphsep.gamma_to_json(tree, s.first_incoherent)
    return out


def cmd_certificate(src: Source, cfg: RunConfig, args) -> dict:
    m = src.matroid
    if args.circuit:
        plus, minus = args.circuit.split("/")
        c = SignedSet(m.mask(plus), m.mask(minus))
        coll = [m.mask(s) for s in args.collection.split(",")]
    elif src.figure:
        fig = construct.NON_POSITROID_FIGURES[src.figure]
        c = SignedSet(m.mask(fig["circuit"][0]), m.mask(fig["circuit"][1]))
        coll = [m.mask(s) for s in fig["collection"]]
    else:
        raise ValidationError("certificate needs --circuit and --collection, or a --figure")
    cert = tilings.bad_collection_certificate(m, c, coll)
    out = cert.to_json(m)
    out["circuit"] = {"plus": m.names(c.plus), "minus": m.names(c.minus)}
    return out


# ---------------------------------------------------------------- plumbing

class _Parser(argparse.ArgumentParser):
    """Usage errors are input errors: exit 3, keeping 2 for resource limits."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INVALID, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="omsep", description=__doc__)
    p.add_argument("--max-colocalizations", type=int, default=tilings.MAX_COLOCALIZATIONS)
    p.add_argument("--max-cliques", type=int, default=tilings.MAX_CLIQUES)
    p.add_argument("--time-budget", type=float, default=300.0, help="seconds")
    p.add_argument("--threads", type=int, default=None, help="recorded; computations run single-threaded")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--output", help="write the report here instead of stdout")
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("validate", help="check circuit axioms of a matroid file")
    v.add_argument("file")
    for name in ("analyze", "purity", "mutation-graph", "flips", "outerplanar", "certificate", "tilings"):
        sp = sub.add_parser(name)
        _add_input(sp)
        if name == "tilings":
            sp.add_argument("--limit", type=int)
            sp.add_argument("--svg", metavar="DIR")
        if name == "purity":
            sp.add_argument("--domain", help="size:K, component:I or a JSON list of sets")
        if name == "outerplanar":
            sp.add_argument("--purity", action="store_true", help="also run the purity check")
        if name == "certificate":
            sp.add_argument("--circuit", help="PLUS/MINUS, e.g. 6/124")
            sp.add_argument("--collection", help="comma separated sets, e.g. 456,1356")
    sub.add_parser("census6")
    sub.add_parser("corank2-table")
    c = sub.add_parser("coherent")
    c.add_argument("a", type=int, nargs="?", default=0)
    c.add_argument("b", type=int, nargs="?", default=0)
    c.add_argument("--tree", metavar="FILE", help="triangulation JSON")
    return p


def _input_digest(args, src: Source | None) -> str:
    h = hashlib.sha256()
    if src is not None:
        h.update(src.raw)
    for name in ("tree", "domain", "circuit", "collection"):
        val = getattr(args, name, None)
        if val:
            h.update(f"{name}={val}".encode())
            if name in ("tree", "domain") and Path(val).is_file():
                h.update(Path(val).read_bytes())
    if args.command == "coherent" and not args.tree:
        h.update(f"{args.a},{args.b}".encode())
    return h.hexdigest()


def run(argv: list[str] | None = None) -> tuple[dict, int]:
    args = build_parser().parse_args(argv)
    threads = args.threads
    if threads is None and os.environ.get("OMSEP_THREADS"):
        threads = int(os.environ["OMSEP_THREADS"])
    src = None
    status = EXIT_OK
    try:
        cfg = RunConfig(args.command, [], args.max_colocalizations, args.max_cliques, args.time_budget,
                        args.output, args.seed, threads)
        if args.command == "validate":
            cfg.inputs = [args.file]
            result, status = cmd_validate(args, cfg)
            src = Source(None, args.file, Path(args.file).read_bytes())
        elif args.command in ("census6", "corank2-table", "coherent"):
            if args.command == "coherent" and args.tree:
                cfg.inputs = [args.tree]
            result = {"census6": lambda: cmd_census6(cfg),
                      "corank2-table": lambda: cmd_corank2_table(cfg),
                      "coherent": lambda: cmd_coherent(cfg, args)}[args.command]()
        else:
            src = load_source(args)
            cfg.inputs = [src.tag]
            handler = {
                "analyze": lambda: cmd_analyze(src, cfg),
                "tilings": lambda: cmd_tilings(src, cfg, args),
                "purity": lambda: cmd_purity(src, cfg, args),
                "mutation-graph": lambda: cmd_mutation_graph(src, cfg),
                "flips": lambda: cmd_flips(src, cfg),
                "outerplanar": lambda: cmd_outerplanar(src, cfg, args),
                "certificate": lambda: cmd_certificate(src, cfg, args),
            }[args.command]
            result = handler()
    except ResourceLimit as e:
        result, status = {"error": "resource-limit", "detail": str(e)}, EXIT_LIMIT
    except (ValidationError, ValueError, KeyError, json.JSONDecodeError, OMError) as e:
        result, status = {"error": "invalid-input", "detail": str(e)}, EXIT_INVALID
    report = {
        "command": args.command,
        "config": asdict(cfg) if "cfg" in locals() else {"command": args.command},
        "input_sha256": _input_digest(args, src),
        "result": result,
        "exit_code": status,
    }
    return report, status


def main(argv: list[str] | None = None) -> int:
    report, status = run(argv)
    text = json.dumps(report, sort_keys=True, indent=2) + "\n"
    if report["config"].get("output"):
        Path(report["config"]["output"]).write_text(text)
    else:
        sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
