"""Command-line entry point: ``linecist <command> [options]``.

Graphs come from an edge-list file (``--input``, ``-`` for stdin) or a
generator spec (``--graph complete:7``, ``h-ell:2,1``, ``petersen``,
``random:8,0.4,SEED``, ``star:5``, ``cycle:6``, ``path:4``).

Exit status: 0 on success, 1 when a verification fails or a soundness alarm
fires, 2 on usage, parse or precondition errors.
"""
from __future__ import annotations

import argparse
import json
import logging
import random
import sys

from . import graph as gr
from .complete import lkn_cists, lkn_family, lkn_fault_survivors
from .connectivity import connectivity_report
from .construct import CdsFamily, CistFamily, line_cists
from .errors import ContractViolation, Infeasible, ParseError, ValidationError
from .io import PALETTE, dumps, from_edge_list, line_names, read_edge_list, to_dot, to_edge_list
from .packing import max_tree_packing, tau_prime
from .theorems import check_theorems
from .verify import (
    cist_exists_bruteforce,
    cist_upper_bounds,
    is_cist_family,
    is_valid_cds_family,
    minimum_connected_dominating_set,
)

log = logging.getLogger("linecist")


class UsageError(Exception):
    pass


def _ints(text: str, count: int, spec: str) -> list[str]:
    parts = text.split(",") if text else []
    if len(parts) != count:
        raise UsageError(f"generator spec {spec!r} needs {count} comma-separated values")
    return parts


def graph_from_spec(spec: str) -> gr.Graph:
    name, _, args = spec.partition(":")
    try:
        if name == "complete":
            return gr.complete_graph(int(_ints(args, 1, spec)[0]))
        if name == "path":
            return gr.path_graph(int(_ints(args, 1, spec)[0]))
        if name == "cycle":
            return gr.cycle_graph(int(_ints(args, 1, spec)[0]))
        if name == "star":
            return gr.star_graph(int(_ints(args, 1, spec)[0]))
        if name == "petersen":
            return gr.petersen_graph()
        if name == "h-ell":
            k, ell = _ints(args, 2, spec)
            return gr.h_ell_graph(int(k), int(ell))
        if name == "random":
            n, p, seed = _ints(args, 3, spec)
            return gr.random_connected_graph(int(n), float(p), random.Random(int(seed)))
    except ValueError as exc:
        raise UsageError(f"bad generator spec {spec!r}: {exc}") from exc
    raise UsageError(f"unknown generator {name!r}")


def load_graph(args) -> gr.Graph:
    if args.input is not None:
        g = from_edge_list(sys.stdin.read()) if args.input == "-" else read_edge_list(args.input)
    elif args.graph is not None:
        g = graph_from_spec(args.graph)
    else:
        raise UsageError("give a graph with --input or --graph")
    if getattr(args, "line", False):
        g = gr.line_graph(g).line
    return g


def _emit(out, doc: dict, fmt: str, text: str | None = None, dot: str | None = None) -> None:
    if fmt == "json":
        out.write(dumps(doc))
    elif fmt == "text":
        out.write(text if text is not None else dumps(doc))
    else:
        if dot is None:
            raise UsageError("this command has no DOT output")
        out.write(dot)


def _family_dot(fam: CistFamily) -> str:
    colors = {}
    for i, t in enumerate(fam.trees):
        for e in t:
            colors[e] = PALETTE[i % len(PALETTE)]
    names = line_names(fam.line) if fam.line is not None else None
    return to_dot(fam.graph, colors, names=names)


def _family_text(fam: CistFamily) -> str:
    lines = [f"{len(fam)} trees on {fam.graph.n} vertices"]
    lab = (lambda x: "".join(map(str, fam.line.labels[x]))) if fam.line is not None else str
    for i, (t, inner) in enumerate(zip(fam.trees, fam.internal)):
        edges = " ".join(f"{lab(a)}-{lab(b)}" for a, b in sorted(t))
        lines.append(f"T{i}: internal {{{', '.join(lab(x) for x in sorted(inner))}}} edges {edges}")
    return "\n".join(lines) + "\n"


def _emit_family(out, fam: CistFamily, fmt: str, extra: dict | None = None) -> int:
    report = is_cist_family(fam.graph, fam)
    doc = dict(fam.to_json())
    doc["count"] = len(fam)
    doc["verification"] = report.to_json()
    doc.update(extra or {})
    _emit(out, doc, fmt, _family_text(fam) + f"verification: {report.summary()}\n", _family_dot(fam))
    return 0 if report.ok else 1


# ------------------------------------------------------------- commands


def cmd_gen(args, out) -> int:
    kind = args.kind
    if kind == "complete":
        g = gr.complete_graph(_need(args.n, "--n"))
    elif kind == "h-ell":
        g = gr.h_ell_graph(_need(args.k, "--k"), _need(args.ell, "--ell"))
    elif kind == "petersen":
        g = gr.petersen_graph()
    elif kind == "star":
        g = gr.star_graph(_need(args.n, "--n"))
    elif kind == "cycle":
        g = gr.cycle_graph(_need(args.n, "--n"))
    elif kind == "path":
        g = gr.path_graph(_need(args.n, "--n"))
    else:
        g = gr.random_connected_graph(_need(args.n, "--n"), args.p, random.Random(args.seed))
    doc = {"n": g.n, "edges": [list(e) for e in g.edges]}
    _emit(out, doc, args.format, to_edge_list(g), to_dot(g))
    return 0


def _need(value, flag: str):
    if value is None:
        raise UsageError(f"{flag} is required")
    return value


def cmd_linegraph(args, out) -> int:
    lg = gr.line_graph(load_graph(args))
    doc = {
        "n": lg.line.n,
        "edges": [list(e) for e in lg.line.edges],
        "labels": [list(e) for e in lg.labels],
    }
    _emit(out, doc, args.format, to_edge_list(lg.line, lg.labels), to_dot(lg.line, names=line_names(lg)))
    return 0


def cmd_report(args, out) -> int:
    rep = connectivity_report(load_graph(args))
    doc = rep.to_json()
    text = "".join(f"{k} {v}\n" for k, v in sorted(doc.items()))
    _emit(out, doc, args.format, text)
    return 0


def cmd_tau(args, out) -> int:
    g = load_graph(args)
    fam = max_tree_packing(g)
    doc = {"tau": len(fam), "packing": fam.to_json()}
    colors = {e: PALETTE[i % len(PALETTE)] for i, t in enumerate(fam.trees) for e in t}
    _emit(out, doc, args.format, f"{len(fam)}\n", to_dot(g, colors))
    return 0


def cmd_tau_prime(args, out) -> int:
    res = tau_prime(load_graph(args), args.cap)
    _emit(out, res.to_json(), args.format, f"{res.value}\n")
    return 0


def cmd_cists(args, out) -> int:
    if args.kind == "lkn":
        n = _need(args.n, "--n")
        fam = lkn_cists(n)
        return _emit_family(out, fam, args.format, {"lkn": lkn_family(n).to_json()})
    g = load_graph(args)
    res = tau_prime(g, args.cap)
    fam = line_cists(g, args.cap)
    return _emit_family(out, fam, args.format, {"tauPrime": res.to_json()})


def _pair(x) -> tuple[int, int]:
    if not (isinstance(x, list) and len(x) == 2 and all(isinstance(v, int) for v in x)):
        raise ParseError(f"expected a vertex pair, got {x!r}")
    return gr.edge_id(*x)


def _family_graph(args, doc: dict) -> tuple[gr.Graph, gr.LineGraph | None]:
    line = doc.get("kind") == "line"
    if args.input is None and args.graph is None:
        if not line or "base_edges" not in doc:
            raise UsageError("give a graph with --input or --graph")
        edges = [_pair(e) for e in doc["base_edges"]]
        base = gr.Graph(doc.get("base_n", 1 + max((v for e in edges for v in e), default=-1)), edges)
    else:
        base = load_graph(args)
    if line:
        lg = gr.line_graph(base)
        return lg.line, lg
    return base, None


def _line_vertex(lg: gr.LineGraph | None, x) -> int:
    if lg is None:
        if not isinstance(x, int):
            raise ParseError(f"expected a vertex index, got {x!r}")
        return x
    e = _pair(x)
    if e not in lg.index:
        raise ParseError(f"{list(e)} is not an edge of the base graph")
    return lg.index[e]


def cmd_verify(args, out) -> int:
    try:
        with open(args.family, encoding="utf-8") as fh:
            doc = json.load(fh)
    except json.JSONDecodeError as exc:
        raise ParseError(f"family file is not JSON: {exc.msg}", exc.lineno) from exc
    g, lg = _family_graph(args, doc)
    v = lambda x: _line_vertex(lg, x)  # noqa: E731
    if args.kind == "cist":
        trees = [frozenset(gr.edge_id(v(a), v(b)) for a, b in t) for t in doc["trees"]]
        if "internal" in doc:
            internal = tuple(frozenset(v(x) for x in s) for s in doc["internal"])
        else:
            internal = None
        fam = CistFamily(g, tuple(trees), internal, lg)
        report = is_cist_family(g, fam)
    else:
        report = is_valid_cds_family(g, CdsFamily.of(g, ([v(x) for x in s] for s in doc["sets"])))
    _emit(out, report.to_json(), args.format, f"{report.summary()}\n")
    return 0 if report.ok else 1


def cmd_gamma_c(args, out) -> int:
    g = load_graph(args)
    s = minimum_connected_dominating_set(g)
    _emit(out, {"gammaC": len(s), "set": sorted(s)}, args.format, f"{len(s)}\n")
    return 0


def cmd_bounds(args, out) -> int:
    b = cist_upper_bounds(load_graph(args))
    doc = b.to_json()
    _emit(out, doc, args.format, "".join(f"{k} {v}\n" for k, v in sorted(doc.items())))
    return 0


def _parse_deleted(text: str) -> list[tuple[int, int]]:
    out = []
    for item in filter(None, text.split(",")):
        a, sep, b = item.partition("-")
        if not sep or not a.isdigit() or not b.isdigit():
            raise UsageError(f"--delete expects items like 0-1, got {item!r}")
        out.append(gr.edge_id(int(a), int(b)))
    return out


def cmd_fault(args, out) -> int:
    n = _need(args.n, "--n")
    deleted = _parse_deleted(args.delete)
    try:
        fam = lkn_fault_survivors(n, deleted)
    except Infeasible as exc:
        _emit(out, {"ok": False, "deleted": [list(e) for e in deleted], "error": str(exc)}, args.format,
              f"infeasible: {exc}\n")
        return 1
    return _emit_family(out, fam, args.format, {"deleted": [list(e) for e in deleted]})


def cmd_oracle(args, out) -> int:
    g = load_graph(args)
    res = cist_exists_bruteforce(g, args.k, args.cap)
    doc = res.to_json()
    doc.update({"k": args.k, "n": g.n, "cap": args.cap, "capBinding": False})
    _emit(out, doc, args.format, "true\n" if res.exists else "false\n")
    return 0


def cmd_check_theorems(args, out) -> int:
    rep = check_theorems(load_graph(args), args.k, size_cap=args.cap, seed=args.seed)
    lines = [f"{c.name}: hypothesis {c.hypothesis}, constructed {c.constructed}, verified {c.verified}"
             + (" SOUNDNESS ALARM" if c.alarm else "") for c in rep.checks]
    lines.append(f"soundness alarms: {len(rep.alarms)}")
    _emit(out, rep.to_json(), args.format, "\n".join(lines) + "\n")
    return 1 if rep.alarms else 0


# --------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="linecist", description=__doc__.splitlines()[0])
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    def command(name: str, fn, default_format: str = "json", graph: bool = True, help: str = ""):
        sp = sub.add_parser(name, help=help)
        sp.set_defaults(fn=fn)
        sp.add_argument("--format", choices=("json", "dot", "text"), default=default_format)
        if graph:
            src = sp.add_mutually_exclusive_group()
            src.add_argument("--input", metavar="PATH", help="edge-list file, '-' for stdin")
            src.add_argument("--graph", metavar="SPEC", help="generator spec such as complete:7")
        return sp

    sp = command("gen", cmd_gen, "text", graph=False, help="write a generated graph")
    sp.add_argument("kind", choices=("complete", "h-ell", "petersen", "random", "star", "cycle", "path"))
    sp.add_argument("--n", type=int)
    sp.add_argument("--k", type=int)
    sp.add_argument("--ell", type=int)
    sp.add_argument("--p", type=float, default=0.5)
    sp.add_argument("--seed", type=int, default=0)

    command("linegraph", cmd_linegraph, "text", help="line graph with edge labels")
    sp = command("report", cmd_report, help="kappa, lambda, delta, lambda_22, super edge-connectedness")
    sp.add_argument("--line", action="store_true", help="operate on the line graph of the input")
    command("tau", cmd_tau, help="maximum number of edge-disjoint spanning trees")
    sp = command("tau-prime", cmd_tau_prime, help="star-subset packing number")
    sp.add_argument("--cap", type=int, help="largest star-subset size to search")

    sp = command("cists", cmd_cists, help="CISTs in L(G) or in L(K_n)")
    sp.add_argument("kind", choices=("line", "lkn"))
    sp.add_argument("--n", type=int)
    sp.add_argument("--cap", type=int, help="largest star-subset size to search")

    sp = command("verify", cmd_verify, help="verify a CIST or CDS family given as JSON")
    sp.add_argument("kind", choices=("cist", "cds"))
    sp.add_argument("--family", required=True, metavar="PATH")

    sp = command("gamma-c", cmd_gamma_c, help="connected domination number")
    sp.add_argument("--line", action="store_true")
    sp = command("bounds", cmd_bounds, help="upper bounds on the number of CISTs")
    sp.add_argument("--line", action="store_true")

    sp = command("fault", cmd_fault, graph=False, help="CISTs of L(K_n) surviving deleted line vertices")
    sp.add_argument("kind", choices=("lkn",))
    sp.add_argument("--n", type=int)
    sp.add_argument("--delete", default="", metavar="U-V,...", help="deleted line vertices as base edges")

    sp = command("oracle", cmd_oracle, "text", help="exhaustive CIST-partition search")
    sp.add_argument("--k", type=int, default=2)
    sp.add_argument("--cap", type=int, default=16, help="refuse graphs with more vertices")
    sp.add_argument("--line", action="store_true")

    sp = command("check-theorems", cmd_check_theorems, help="constructive check of sufficient conditions")
    sp.add_argument("--k", type=int, default=2)
    sp.add_argument("--cap", type=int, help="star-subset size cap for tau'")
    sp.add_argument("--seed", type=int, default=0)
    return p


def run(argv: list[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, stream=err,
                        format="%(levelname)s: %(message)s")
    try:
        return args.fn(args, out)
    except (UsageError, ParseError, ContractViolation, OSError, KeyError, TypeError) as exc:
        err.write(f"linecist: error: {exc}\n")
        return 2
    except ValidationError as exc:
        err.write(f"linecist: verification failed: {exc}\n")
        return 1
    except Infeasible as exc:
        err.write(f"linecist: infeasible: {exc}\n")
        return 1


def main() -> None:
    sys.exit(run())
