"""Edge-disjoint spanning tree packing and the star-subset parameter tau'.

Packing uses Edmonds' matroid partition algorithm on k copies of the graphic
matroid: an uncovered edge is pushed into the forests along a shortest
exchange sequence, each step swapping one edge out of a forest cycle.
"""
from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator

from .errors import ContractViolation, Infeasible
from .graph import Edge, Graph, delete_vertices, edge_id, induced_subgraph, is_spanning_tree


@dataclass(frozen=True)
class SpanningForestFamily:
    graph: Graph
    trees: tuple[frozenset[Edge], ...]

    def __len__(self) -> int:
        return len(self.trees)

    def is_valid(self) -> bool:
        used: set[Edge] = set()
        for t in self.trees:
            if used & t or not t <= self.graph.edge_set:
                return False
            if not is_spanning_tree(self.graph.n, t):
                return False
            used |= t
        return True

    def to_json(self) -> dict:
        return {"trees": [sorted(list(e) for e in t) for t in self.trees]}


class _Forests:
    """k edge-disjoint forests of a fixed graph, with path queries."""

    def __init__(self, g: Graph, k: int):
        self.g = g
        self.k = k
        self.owner: dict[Edge, int] = {}
        self.adj: list[list[set[int]]] = [[set() for _ in range(g.n)] for _ in range(k)]
        self.size = [0] * k

    def add_forest(self) -> None:
        self.k += 1
        self.adj.append([set() for _ in range(self.g.n)])
        self.size.append(0)

    def _put(self, e: Edge, i: int) -> None:
        u, v = e
        self.adj[i][u].add(v)
        self.adj[i][v].add(u)
        self.owner[e] = i
        self.size[i] += 1

    def _take(self, e: Edge) -> None:
        i = self.owner.pop(e)
        u, v = e
        self.adj[i][u].discard(v)
        self.adj[i][v].discard(u)
        self.size[i] -= 1

    def path(self, i: int, u: int, v: int) -> list[Edge] | None:
        """Edges of the u-v path in forest i, or None if u and v are in different trees."""
        adj = self.adj[i]
        pred = {u: u}
        queue = deque([u])
        while queue:
            x = queue.popleft()
            if x == v:
                break
            for y in adj[x]:
                if y not in pred:
                    pred[y] = x
                    queue.append(y)
        if v not in pred:
            return None
        out = []
        while v != u:
            out.append(edge_id(v, pred[v]))
            v = pred[v]
        return out

    def insert(self, e0: Edge) -> bool:
        """Try to cover e0 by a shortest augmenting exchange sequence."""
        label: dict[Edge, tuple[Edge | None, int]] = {e0: (None, -1)}
        queue = deque([e0])
        while queue:
            x = queue.popleft()
            home = self.owner.get(x, -1)
            for i in range(self.k):
                if i == home:
                    continue
                p = self.path(i, *x)
                if p is None:
                    self._augment(x, i, label)
                    return True
                for y in p:
                    if y not in label:
                        label[y] = (x, i)
                        queue.append(y)
        return False

    def _augment(self, last: Edge, target: int, label) -> None:
        moves = [(last, target)]
        y = last
        while True:
            x, i = label[y]
            if x is None:
                break
            moves.append((x, i))
            y = x
        for e, _ in moves:
            if e in self.owner:
                self._take(e)
        for e, i in moves:
            self._put(e, i)

    def full(self) -> bool:
        return all(s == self.g.n - 1 for s in self.size)

    def trees(self) -> tuple[frozenset[Edge], ...]:
        out: list[set[Edge]] = [set() for _ in range(self.k)]
        for e, i in self.owner.items():
            out[i].add(e)
        return tuple(frozenset(t) for t in out)


def _greedy_fill(fs: _Forests, edges: Iterable[Edge]) -> list[Edge]:
    """Cover edges directly where possible; return those that need augmentation."""
    rest = []
    for e in edges:
        for i in range(fs.k):
            if fs.size[i] < fs.g.n - 1 and fs.path(i, *e) is None:
                fs._put(e, i)
                break
        else:
            rest.append(e)
    return rest


def _pack(fs: _Forests, pending: list[Edge]) -> list[Edge]:
    left = []
    for e in pending:
        if fs.full():
            left.append(e)
        elif not fs.insert(e):
            left.append(e)
    return left


def tree_packing(g: Graph, k: int) -> SpanningForestFamily:
    """Exactly k pairwise edge-disjoint spanning trees of G; raises Infeasible if none exist."""
    if k < 0:
        raise ContractViolation("k must be non-negative")
    if k == 0:
        return SpanningForestFamily(g, ())
    if g.n < 2:
        raise Infeasible("a trivial graph is treated as having no spanning tree packing")
    if not g.is_connected() or k * (g.n - 1) > g.m:
        raise Infeasible(f"G has no {k} edge-disjoint spanning trees")
    fs = _Forests(g, k)
    _pack(fs, _greedy_fill(fs, g.edges))
    if not fs.full():
        raise Infeasible(f"G has no {k} edge-disjoint spanning trees")
    return SpanningForestFamily(g, fs.trees())


def max_tree_packing(g: Graph) -> SpanningForestFamily:
    """A witness for tau(G): a maximum family of edge-disjoint spanning trees."""
    if g.n < 2 or not g.is_connected():
        return SpanningForestFamily(g, ())
    bound = min(g.min_degree, g.m // (g.n - 1))
    fs = _Forests(g, 1)
    pending = _greedy_fill(fs, g.edges)
    best: tuple[frozenset[Edge], ...] = ()
    while True:
        pending = _pack(fs, pending)
        if not fs.full():
            break
        best = fs.trees()
        if fs.k >= bound:
            break
        fs.add_forest()
    return SpanningForestFamily(g, best)


def tau(g: Graph) -> int:
    """Maximum number of edge-disjoint spanning trees (0 for trivial or disconnected G)."""
    return len(max_tree_packing(g))


def tau_bound(g: Graph) -> int:
    """Cheap upper bound min(delta, |E| / (|V| - 1)) on tau(G)."""
    if g.n < 2 or not g.is_connected():
        return 0
    return min(g.min_degree, g.m // (g.n - 1))


def tree_packing_bruteforce(g: Graph, k: int) -> tuple[frozenset[Edge], ...] | None:
    """k disjoint spanning trees by enumerating all spanning trees; oracle for tiny graphs."""
    if k == 0:
        return ()
    if g.n < 2 or not g.is_connected() or k * (g.n - 1) > g.m:
        return None
    bit = {e: 1 << i for i, e in enumerate(g.edges)}
    masks = sorted(
        sum(bit[e] for e in c)
        for c in combinations(g.edges, g.n - 1)
        if is_spanning_tree(g.n, c)
    )

    def search(start: int, used: int, depth: int) -> list[int] | None:
        if depth == k:
            return []
        for idx in range(start, len(masks)):
            t = masks[idx]
            if t & used:
                continue
            rest = search(idx + 1, used | t, depth + 1)
            if rest is not None:
                return [t, *rest]
        return None

    found = search(0, 0, 0)
    if found is None:
        return None
    return tuple(frozenset(e for e in g.edges if bit[e] & t) for t in found)


def tau_bruteforce(g: Graph) -> int:
    k = 0
    while tree_packing_bruteforce(g, k + 1) is not None:
        k += 1
    return k


# ------------------------------------------------------------- star subsets


def f_s(g: Graph, s: Iterable[int], v: int) -> int:
    """Number of edges from v ∈ S to vertices outside S."""
    ss = set(s)
    if v not in ss:
        raise ContractViolation(f"vertex {v} is not in S")
    return sum(1 for w in g.adj[v] if w not in ss)


def zeta(g: Graph, s: Iterable[int]) -> float:
    """min over edges uv inside S of f_S(u) + f_S(v); inf if S spans no edge."""
    ss = set(s)
    if len(ss) >= g.n and g.n:
        raise ContractViolation("S must be a proper subset of V(G)")
    f = {v: sum(1 for w in g.adj[v] if w not in ss) for v in ss}
    inner = [(u, v) for u, v in g.edges if u in ss and v in ss]
    if not inner:
        return math.inf
    return min(f[u] + f[v] for u, v in inner)


def is_star_subset(g: Graph, s: Iterable[int]) -> bool:
    """Every component of <S>_G is a star (K_1, K_2 or K_{1,r})."""
    h, _ = induced_subgraph(g, s)
    return _star_forest(h)


def _star_forest(h: Graph) -> bool:
    from .graph import components

    for comp in components(h):
        edges = sum(h.degree(v) for v in comp) // 2
        if edges != len(comp) - 1:
            return False
        if sum(1 for v in comp if h.degree(v) >= 2) > 1:
            return False
    return True


def star_subsets(g: Graph, size: int) -> Iterator[tuple[int, ...]]:
    """All star-subsets of exactly ``size`` vertices, in lexicographic order.

    Being a star forest is hereditary, so the DFS prunes any prefix that is
    already not one.
    """
    n = g.n
    adj = g.adj

    def ok(chosen: list[int]) -> bool:
        # incremental: only the newest vertex can break the property
        cs = set(chosen)
        v = chosen[-1]
        inside = [w for w in adj[v] if w in cs]
        if not inside:
            return True
        # v joins components; the merged component must be a star
        seen = {v}
        stack = [v]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y in cs and y not in seen:
                    seen.add(y)
                    stack.append(y)
        deg = {x: sum(1 for y in adj[x] if y in seen) for x in seen}
        if sum(deg.values()) // 2 != len(seen) - 1:
            return False
        return sum(1 for d in deg.values() if d >= 2) <= 1

    def rec(start: int, chosen: list[int]) -> Iterator[tuple[int, ...]]:
        if len(chosen) == size:
            yield tuple(chosen)
            return
        for v in range(start, n - (size - len(chosen)) + 1):
            chosen.append(v)
            if ok(chosen):
                yield from rec(v + 1, chosen)
            chosen.pop()

    if size == 0:
        yield ()
        return
    yield from rec(0, [])


@dataclass(frozen=True)
class StarSubsetWitness:
    s: tuple[int, ...]
    zeta: float
    tau_remainder: int

    @property
    def value(self) -> int:
        return int(min(self.zeta, self.tau_remainder))

    def to_json(self) -> dict:
        from .io import encode_inf

        return {
            "S": list(self.s),
            "zeta": encode_inf(self.zeta),
            "tauRemainder": self.tau_remainder,
            "value": self.value,
        }


@dataclass(frozen=True)
class TauPrimeResult:
    value: int
    witness: StarSubsetWitness
    cap: int
    cap_binding: bool | None
    evaluated: int

    def to_json(self) -> dict:
        return {
            "value": self.value,
            "witness": self.witness.to_json(),
            "cap": self.cap,
            "capBinding": self.cap_binding,
            "tauEvaluations": self.evaluated,
        }


def _remainder_bound(g: Graph, s: tuple[int, ...]) -> tuple[int, Graph | None]:
    if not s:
        return tau_bound(g), g
    h, _ = delete_vertices(g, s)
    if h.n < 2 or not h.is_connected():
        return 0, None
    return tau_bound(h), h


def tau_prime(g: Graph, size_cap: int | None = None, *, check_cap: bool = True) -> TauPrimeResult:
    """max over star-subsets S with |S| <= size_cap of min(tau(G - S), zeta(S)).

    Subsets are scanned by increasing size, lexicographically within a size;
    the witness is the first one reaching the maximum. ``cap_binding`` tells
    whether some larger star-subset could still beat the value (checked with
    the cheap bound only); it is None when no cap was applied.
    """
    full = max(g.n - 1, 0)
    cap = full if size_cap is None else min(size_cap, full)
    if cap < 0:
        raise ContractViolation("size cap must be non-negative")
    best_val = -1
    best: StarSubsetWitness | None = None
    evaluated = 0
    for size in range(cap + 1):
        for s in star_subsets(g, size):
            z = zeta(g, s)
            ub, h = _remainder_bound(g, s)
            if min(z, ub) <= best_val:
                continue
            t = tau(h) if h is not None else 0
            evaluated += 1
            val = int(min(z, t))
            if val > best_val:
                best_val = val
                best = StarSubsetWitness(s, z, t)
    assert best is not None
    binding = None
    if cap < full and check_cap:
        binding = False
        for size in range(cap + 1, full + 1):
            for s in star_subsets(g, size):
                if min(zeta(g, s), _remainder_bound(g, s)[0]) > best_val:
                    binding = True
                    break
            if binding:
                break
    return TauPrimeResult(best_val, best, cap, binding, evaluated)
