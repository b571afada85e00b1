"""Vertex/edge connectivity, 2-2-restricted edge connectivity and super edge-connectedness.

Every quantity is computed exactly with unit-capacity augmenting-path max-flow.
"""
from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from typing import Iterable

from .errors import ContractViolation
from .graph import Graph, components

_BIG = 1 << 30
_UNSET = object()


class _FlowNetwork:
    """Residual network stored as parallel arrays; arcs come in (forward, reverse) pairs."""

    def __init__(self, size: int):
        self.head: list[list[int]] = [[] for _ in range(size)]
        self.to: list[int] = []
        self.cap: list[int] = []

    def add_arc(self, u: int, v: int, cap: int, rcap: int = 0) -> None:
        self.head[u].append(len(self.to))
        self.to.append(v)
        self.cap.append(cap)
        self.head[v].append(len(self.to))
        self.to.append(u)
        self.cap.append(rcap)

    def max_flow(self, s: int, t: int, limit: int = _BIG) -> int:
        """Flow value from s to t, stopping early once ``limit`` is reached."""
        flow = 0
        to, cap, head = self.to, self.cap, self.head
        size = len(head)
        while flow < limit:
            pred = [-1] * size
            pred[s] = -2
            queue = deque([s])
            while queue and pred[t] == -1:
                x = queue.popleft()
                for a in head[x]:
                    y = to[a]
                    if cap[a] > 0 and pred[y] == -1:
                        pred[y] = a
                        queue.append(y)
            if pred[t] == -1:
                break
            y = t
            while y != s:
                a = pred[y]
                cap[a] -= 1
                cap[a ^ 1] += 1
                y = to[a ^ 1]
            flow += 1
        return flow


class _EdgeCutOracle:
    """Min edge cuts between vertex sets of one graph, reusing a prebuilt network."""

    def __init__(self, g: Graph):
        n = g.n
        net = _FlowNetwork(n + 2)
        for u, v in g.edges:
            net.add_arc(u, v, 1, 1)
        self.src_arc = []
        self.snk_arc = []
        for x in range(n):
            self.src_arc.append(len(net.to))
            net.add_arc(n, x, 0)
            self.snk_arc.append(len(net.to))
            net.add_arc(x, n + 1, 0)
        self.net = net
        self.base = list(net.cap)
        self.n = n

    def cut(self, sources: Iterable[int], sinks: Iterable[int], limit: int = _BIG) -> int:
        cap = list(self.base)
        for x in sources:
            cap[self.src_arc[x]] = _BIG
        for x in sinks:
            cap[self.snk_arc[x]] = _BIG
        self.net.cap = cap
        return self.net.max_flow(self.n, self.n + 1, limit)


def _edge_flow(g: Graph, sources: Iterable[int], sinks: Iterable[int], limit: int = _BIG) -> int:
    """Min number of edges separating the vertex set ``sources`` from ``sinks``."""
    return _EdgeCutOracle(g).cut(sources, sinks, limit)


def local_vertex_connectivity(g: Graph, s: int, t: int, limit: int = _BIG) -> int:
    """Max number of internally disjoint s-t paths for non-adjacent s, t (vertex-split network)."""
    if g.has_edge(s, t):
        raise ContractViolation("local vertex connectivity needs non-adjacent vertices")
    net = _FlowNetwork(2 * g.n)
    for v in range(g.n):
        net.add_arc(2 * v, 2 * v + 1, _BIG if v in (s, t) else 1)
    for u, v in g.edges:
        net.add_arc(2 * u + 1, 2 * v, _BIG)
        net.add_arc(2 * v + 1, 2 * u, _BIG)
    return net.max_flow(2 * s + 1, 2 * t, limit)


def edge_connectivity(g: Graph) -> int:
    if g.n < 2:
        raise ContractViolation("edge connectivity needs at least two vertices")
    if not g.is_connected():
        return 0
    best = g.min_degree
    oracle = _EdgeCutOracle(g)
    for t in range(1, g.n):
        best = min(best, oracle.cut([0], [t], best))
    return best


def vertex_connectivity(g: Graph) -> int:
    """kappa(G); a complete graph K_n gets n - 1."""
    if g.n < 2:
        raise ContractViolation("vertex connectivity needs at least two vertices")
    if not g.is_connected():
        return 0
    if g.m == g.n * (g.n - 1) // 2:
        return g.n - 1
    # Esfahanian-Hakimi: a minimum cut either avoids a min-degree vertex v
    # (then it separates v from a non-neighbour) or contains v (then it
    # separates two non-adjacent neighbours of v).
    v = min(range(g.n), key=lambda x: (g.degree(x), x))
    best = g.degree(v)
    for w in range(g.n):
        if w != v and not g.has_edge(v, w):
            best = min(best, local_vertex_connectivity(g, v, w, best))
    nbrs = g.neighbors(v)
    for x, y in itertools.combinations(nbrs, 2):
        if not g.has_edge(x, y):
            best = min(best, local_vertex_connectivity(g, x, y, best))
    return best


def disjoint_edge_pairs(g: Graph):
    for e1, e2 in itertools.combinations(g.edges, 2):
        if not set(e1) & set(e2):
            yield e1, e2


def restricted_edge_connectivity_22(g: Graph, *, lam: int | None = None, cap: int = _BIG) -> int | None:
    """lambda_{2,2}(G), or None when G has no 2-2-edge-cut.

    For each pair of vertex-disjoint edges, the two edges are pinned to
    opposite sides and a minimum edge cut between them is computed. The
    scan stops once the value drops to lambda(G), which it cannot go below.
    Values above ``cap`` are reported as ``cap``.
    """
    pairs = disjoint_edge_pairs(g)
    first = next(pairs, None)
    if first is None:
        return None
    if lam is None:
        lam = edge_connectivity(g) if g.n >= 2 else 0
    oracle = _EdgeCutOracle(g)
    best = oracle.cut(*first, cap)
    for e1, e2 in pairs:
        if best <= lam:
            break
        best = min(best, oracle.cut(e1, e2, best))
    return best


def is_super_edge_connected(g: Graph, *, lam: int | None = None, lam22=_UNSET) -> bool:
    """Every minimum edge cut isolates a vertex."""
    if not g.is_connected():
        raise ContractViolation("super edge-connectivity is defined for connected graphs")
    if g.n < 2:
        return True
    if lam is None:
        lam = edge_connectivity(g)
    if lam22 is _UNSET:
        if lam < g.min_degree:
            return False
        lam22 = restricted_edge_connectivity_22(g, lam=lam, cap=lam + 1)
    return lam22 is None or lam22 > lam


def essential_edge_connectivity_at_least(g: Graph, h: int, *, lam22=_UNSET) -> bool:
    if not g.is_connected():
        raise ContractViolation("essential edge-connectivity is defined for connected graphs")
    if lam22 is _UNSET:
        lam22 = restricted_edge_connectivity_22(g, cap=h)
    return lam22 is None or lam22 >= h


def is_star(g: Graph) -> bool:
    """Connected graph that is a tree with at most one vertex of degree >= 2."""
    return (
        g.n >= 1
        and g.m == g.n - 1
        and g.is_connected()
        and sum(1 for v in range(g.n) if g.degree(v) >= 2) <= 1
    )


@dataclass(frozen=True)
class ConnectivityReport:
    kappa: int
    lam: int
    delta: int
    lambda22: int | None
    super_edge_connected: bool

    def to_json(self) -> dict:
        return {
            "kappa": self.kappa,
            "lambda": self.lam,
            "delta": self.delta,
            "lambda22": self.lambda22,
            "superEdgeConnected": self.super_edge_connected,
        }


def connectivity_report(g: Graph) -> ConnectivityReport:
    if g.n < 2 or not g.is_connected():
        raise ContractViolation("connectivity report needs a connected graph on >= 2 vertices")
    lam = edge_connectivity(g)
    lam22 = restricted_edge_connectivity_22(g, lam=lam)
    return ConnectivityReport(
        kappa=vertex_connectivity(g),
        lam=lam,
        delta=g.min_degree,
        lambda22=lam22,
        super_edge_connected=is_super_edge_connected(g, lam=lam, lam22=lam22),
    )


def restricted_edge_connectivity_22_bruteforce(g: Graph) -> int | None:
    """lambda_{2,2} by enumerating vertex bipartitions; oracle for small graphs."""
    if g.n > 16:
        raise ContractViolation("bipartition oracle is limited to 16 vertices")
    best = None
    for mask in range(1, (1 << (g.n - 1))):
        side = {v for v in range(g.n) if mask >> v & 1}
        cut = [e for e in g.edges if (e[0] in side) != (e[1] in side)]
        rest = Graph(g.n, (e for e in g.edges if (e[0] in side) == (e[1] in side)))
        big = sum(1 for c in components(rest) if len(c) >= 2)
        if big >= 2 and (best is None or len(cut) < best):
            best = len(cut)
    return best

