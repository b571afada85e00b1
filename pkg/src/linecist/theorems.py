"""Connectivity-based sufficient conditions for CISTs in line graphs, checked constructively.

Each checker evaluates a hypothesis with the connectivity module and, when it
holds, builds the promised trees and verifies them. A satisfied hypothesis
whose construction does not verify is a soundness alarm.
"""
from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass, field
from typing import Callable

from .connectivity import (
    edge_connectivity,
    essential_edge_connectivity_at_least,
    is_star,
    is_super_edge_connected,
    restricted_edge_connectivity_22,
    vertex_connectivity,
)
from .construct import cists_for_star, line_cists, line_cists_case1
from .errors import ContractViolation, Infeasible, ValidationError
from .graph import Edge, Graph, delete_edges, drop_isolated, line_graph
from .packing import tree_packing
from .verify import is_cist_family


@dataclass
class TheoremCheck:
    name: str
    hypothesis: bool
    detail: str
    promised: int = 0
    constructed: int | None = None
    verified: bool | None = None
    deletion_sets: int = 0
    alarm: bool = False
    note: str = ""

    def to_json(self) -> dict:
        return {
            "theorem": self.name,
            "hypothesis": self.hypothesis,
            "detail": self.detail,
            "promised": self.promised,
            "constructed": self.constructed,
            "verified": self.verified,
            "deletionSets": self.deletion_sets,
            "alarm": self.alarm,
            "note": self.note,
        }


@dataclass
class TheoremReport:
    n: int
    m: int
    k: int
    delta: int
    lam: int
    lambda22: int | None
    super_edge_connected: bool
    kappa_line: int
    checks: list[TheoremCheck] = field(default_factory=list)

    @property
    def alarms(self) -> list[TheoremCheck]:
        return [c for c in self.checks if c.alarm]

    def to_json(self) -> dict:
        return {
            "graph": {"n": self.n, "m": self.m},
            "k": self.k,
            "delta": self.delta,
            "lambda": self.lam,
            "lambda22": self.lambda22,
            "superEdgeConnected": self.super_edge_connected,
            "kappaLine": self.kappa_line,
            "theorems": [c.to_json() for c in self.checks],
            "soundnessAlarms": len(self.alarms),
        }


@dataclass(frozen=True)
class GraphFacts:
    delta: int
    lam: int
    lambda22: int | None
    super_edge_connected: bool
    kappa_line: int
    star: bool

    @classmethod
    def of(cls, g: Graph) -> "GraphFacts":
        lam = edge_connectivity(g)
        lam22 = restricted_edge_connectivity_22(g, lam=lam)
        lg = line_graph(g).line
        return cls(
            delta=g.min_degree,
            lam=lam,
            lambda22=lam22,
            super_edge_connected=is_super_edge_connected(g, lam=lam, lam22=lam22),
            kappa_line=vertex_connectivity(lg) if lg.n >= 2 else 0,
            star=is_star(g),
        )


def _outcome(build: Callable[[], object], line_n: int, promised: int) -> tuple[int | None, bool, str]:
    """Run a constructor; return (trees built, verified, note)."""
    try:
        fam = build()
    except (Infeasible, ValidationError, ContractViolation) as exc:
        return None, False, f"{type(exc).__name__}: {exc}"
    report = is_cist_family(fam.graph, fam)
    ok = report.ok and len(fam) >= promised and fam.graph.n == line_n
    return len(fam), ok, "" if ok else report.summary()


def _cists_after_deleting(g: Graph, deleted: tuple[Edge, ...], c: int):
    """c CISTs in L(G) - deleted via a tree packing of G - deleted."""
    h = delete_edges(g, deleted)
    h, _ = drop_isolated(h)
    return line_cists_case1(h, (), c)


def _deletion_sets(g: Graph, size: int, limit: int, rng: random.Random) -> list[tuple[Edge, ...]]:
    """Line-vertex sets (base edges) of size <= ``size`` leaving at least one line vertex.

    All of them when there are at most ``limit``; otherwise the empty set
    plus a seeded sample.
    """
    edges = g.edges
    size = min(size, len(edges) - 1)
    total = sum(math.comb(len(edges), r) for r in range(size + 1))
    if total <= limit:
        return [c for r in range(size + 1) for c in itertools.combinations(edges, r)]
    out: list[tuple[Edge, ...]] = [()]
    for _ in range(limit - 1):
        r = rng.randint(1, size)
        out.append(tuple(sorted(rng.sample(edges, r))))
    return out


def _check_deletions(g: Graph, c: int, size: int, limit: int, rng: random.Random, chk: TheoremCheck) -> None:
    chk.promised = c
    built = []
    notes = []
    sets = _deletion_sets(g, size, limit, rng)
    for d in sets:
        line_n = g.m - len(d)
        count, ok, note = _outcome(lambda: _cists_after_deleting(g, d, c), line_n, c)
        built.append(count if count is not None else 0)
        if not ok:
            notes.append(f"deleting {list(d)}: {note}")
    chk.deletion_sets = len(sets)
    chk.constructed = min(built) if built else None
    chk.verified = not notes
    chk.alarm = bool(notes)
    chk.note = "; ".join(notes[:3])


def _supergraph_witness(g: Graph, k: int, limit: int) -> tuple[bool | None, str]:
    """Is there G* ⊇ G with at most k extra edges, not super edge-connected or with delta >= 2k?"""
    non_edges = [e for e in itertools.combinations(range(g.n), 2) if e not in g.edge_set]
    tried = 0
    for r in range(k + 1):
        for extra in itertools.combinations(non_edges, r):
            if tried >= limit:
                return None, f"undetermined after {limit} supergraphs"
            tried += 1
            gs = Graph(g.n, g.edges + extra)
            if gs.min_degree >= 2 * k:
                return True, f"adding {list(extra)} gives delta >= {2 * k}"
            if not is_super_edge_connected(gs):
                return True, f"adding {list(extra)} gives a graph that is not super edge-connected"
    return False, "no supergraph with <= k extra edges qualifies"


def check_theorems(
    g: Graph,
    k: int,
    *,
    deletion_limit: int = 12,
    supergraph_limit: int = 60,
    size_cap: int | None = None,
    seed: int = 0,
    facts: GraphFacts | None = None,
) -> TheoremReport:
    if g.n < 2 or not g.is_connected():
        raise ContractViolation("check_theorems needs a connected graph on >= 2 vertices")
    if k < 1:
        raise ContractViolation("k must be positive")
    rng = random.Random(seed)
    f = facts or GraphFacts.of(g)
    kl = f.kappa_line
    rep = TheoremReport(g.n, g.m, k, f.delta, f.lam, f.lambda22, f.super_edge_connected, kl)

    def simple(name: str, hyp: bool, detail: str, promised: int, build) -> None:
        chk = TheoremCheck(name, hyp, detail, promised)
        if hyp:
            chk.constructed, chk.verified, chk.note = _outcome(build, g.m, promised)
            chk.alarm = not chk.verified
        rep.checks.append(chk)

    case1 = lambda: line_cists_case1(g, (), k)  # noqa: E731

    # every line graph has tau'(G) CISTs
    if g.m >= 2:
        from .packing import tau_prime

        tp = tau_prime(g, size_cap, check_cap=False)
        simple(
            "tau-prime", True, f"tau'(G) = {tp.value} with S = {list(tp.witness.s)}",
            tp.value, lambda: line_cists(g, size_cap),
        )

    cond1 = (not f.super_edge_connected) or f.delta >= 2 * k
    hyp = k >= 2 and kl >= 2 * k and cond1
    simple(
        "connectivity-2k", hyp,
        f"kappa(L) = {kl} >= {2 * k}: {kl >= 2 * k}; not super or delta >= {2 * k}: {cond1}",
        k, case1,
    )

    chk = TheoremCheck("connectivity-2k-deletions", hyp, f"as connectivity-2k, deleting up to {k} line vertices")
    if hyp:
        _check_deletions(g, k, k, deletion_limit, rng, chk)
    rep.checks.append(chk)

    mm = min(f.delta, kl)
    c = mm // 2
    chk = TheoremCheck(
        "min-degree-deletions", c >= 1,
        f"min(delta, kappa(L)) = {mm}: {c} CISTs after deleting <= {math.ceil(mm / 2)} line vertices",
    )
    if c >= 1:
        _check_deletions(g, c, math.ceil(mm / 2), deletion_limit, rng, chk)
    rep.checks.append(chk)

    c2 = kl // 2
    hyp2 = (not f.super_edge_connected) and c2 >= 1
    chk = TheoremCheck(
        "nonsuper-deletions", hyp2,
        f"not super edge-connected: {not f.super_edge_connected}; "
        f"{c2} CISTs after deleting <= {math.ceil(kl / 2)} line vertices",
    )
    if hyp2:
        _check_deletions(g, c2, math.ceil(kl / 2), deletion_limit, rng, chk)
    rep.checks.append(chk)

    if k >= 2 and kl >= 2 * k:
        if f.star:
            witness, how = True, "G is a star"
        elif cond1:
            witness, how = True, "G itself qualifies"
        else:
            witness, how = _supergraph_witness(g, k, supergraph_limit)
    else:
        witness, how = False, f"kappa(L) = {kl} < {2 * k}" if k >= 2 else "k < 2"
    chk = TheoremCheck("supergraph-2k", bool(witness), how, k)
    if witness:
        build = (lambda: cists_for_star(g, k)) if f.star else case1
        chk.constructed, chk.verified, chk.note = _outcome(build, g.m, k)
        chk.alarm = not chk.verified
    elif witness is None:
        chk.note = how
    rep.checks.append(chk)

    d = f.delta
    if k >= 2 and f.super_edge_connected and k < d < 2 * k:
        need = math.ceil(d * d / (d - k)) - 2
        hyp = kl >= need
        detail = f"super, {k} < delta = {d} < {2 * k}, kappa(L) = {kl} >= {need}: {hyp}"
    else:
        hyp, detail = False, f"needs k >= 2, super edge-connected and {k} < delta < {2 * k}"
    simple("super-mid-degree", hyp, detail, k, case1)

    need3 = k * k + 2 * k - 1
    hyp = k >= 2 and kl >= need3 and d >= k + 1
    simple("quadratic-connectivity", hyp, f"kappa(L) = {kl} >= {need3} and delta = {d} >= {k + 1}: {hyp}", k, case1)

    regular = g.min_degree == g.max_degree
    hyp = k >= 2 and regular and kl >= 4 * k - 2
    simple("regular", hyp, f"regular: {regular}; kappa(L) = {kl} >= {4 * k - 2}", k, case1)

    # g-edge-connected and essentially h-edge-connected => k trees in G
    hits = []
    for gg in range(k + 1, 2 * k):
        h = math.ceil(gg * gg / (gg - k)) - 2
        if f.lam >= gg and essential_edge_connectivity_at_least(g, h, lam22=f.lambda22):
            hits.append((gg, h))
    chk = TheoremCheck("essential-packing", bool(hits), f"(g, h) pairs met: {hits}", k)
    if hits:
        try:
            fam = tree_packing(g, k)
            chk.constructed, chk.verified = len(fam), fam.is_valid()
        except Infeasible as exc:
            chk.constructed, chk.verified, chk.note = 0, False, str(exc)
        chk.alarm = not chk.verified
    rep.checks.append(chk)
    return rep
