"""Simple undirected graphs on vertices ``0..n-1`` and the line-graph construction."""
from __future__ import annotations

import itertools
import random
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .errors import ContractViolation

Edge = tuple[int, int]


def edge_id(u: int, v: int) -> Edge:
    """Canonical form ``(min, max)`` of an undirected edge."""
    if u == v:
        raise ContractViolation(f"self-loop at vertex {u}")
    return (u, v) if u < v else (v, u)


class Graph:
    """Immutable simple undirected graph with vertex set ``range(n)``."""

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = ()):
        if n < 0:
            raise ContractViolation("vertex count must be non-negative")
        canon = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ContractViolation(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
            canon.add(edge_id(u, v))
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in canon:
            adj[u].add(v)
            adj[v].add(u)
        self.n = n
        self.edges: tuple[Edge, ...] = tuple(sorted(canon))
        self.adj: tuple[frozenset[int], ...] = tuple(frozenset(a) for a in adj)

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def neighbors(self, v: int) -> list[int]:
        return sorted(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    @property
    def min_degree(self) -> int:
        return min((len(a) for a in self.adj), default=0)

    @property
    def max_degree(self) -> int:
        return max((len(a) for a in self.adj), default=0)

    @cached_property
    def edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges)

    @cached_property
    def nbr_masks(self) -> tuple[int, ...]:
        return tuple(sum(1 << w for w in a) for a in self.adj)

    @cached_property
    def closed_masks(self) -> tuple[int, ...]:
        return tuple(mask | (1 << v) for v, mask in enumerate(self.nbr_masks))

    def is_connected(self) -> bool:
        return self.n <= 1 or len(components(self)) == 1

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class LineGraph:
    """A line graph together with the base edge behind each of its vertices."""

    base: Graph
    line: Graph
    labels: tuple[Edge, ...]

    @cached_property
    def index(self) -> dict[Edge, int]:
        return {e: i for i, e in enumerate(self.labels)}

    def vertex_of(self, e: Sequence[int]) -> int:
        return self.index[edge_id(*e)]

    def vertices_of(self, edges: Iterable[Sequence[int]]) -> frozenset[int]:
        return frozenset(self.vertex_of(e) for e in edges)

    def label_edge(self, a: int, b: int) -> tuple[Edge, Edge]:
        x, y = self.labels[a], self.labels[b]
        return (x, y) if x < y else (y, x)


def line_graph(g: Graph) -> LineGraph:
    labels = g.edges  # already lexicographic
    index = {e: i for i, e in enumerate(labels)}
    line_edges = []
    for v in range(g.n):
        incident = sorted(index[edge_id(v, w)] for w in g.adj[v])
        line_edges.extend(itertools.combinations(incident, 2))
    return LineGraph(g, Graph(len(labels), line_edges), labels)


# ---------------------------------------------------------------- generators


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise ContractViolation("complete_graph needs n >= 1")
    return Graph(n, itertools.combinations(range(n), 2))


def path_graph(n: int) -> Graph:
    return Graph(n, ((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ContractViolation("a cycle needs at least 3 vertices")
    return Graph(n, ((i, (i + 1) % n) for i in range(n)))


def star_graph(leaves: int) -> Graph:
    """K_{1,leaves} with centre 0."""
    return Graph(leaves + 1, ((0, i) for i in range(1, leaves + 1)))


def petersen_graph() -> Graph:
    """Kneser graph K(5,2): 2-subsets of {0..4}, adjacent when disjoint."""
    pairs = list(itertools.combinations(range(5), 2))
    edges = [
        (i, j)
        for i, j in itertools.combinations(range(len(pairs)), 2)
        if not set(pairs[i]) & set(pairs[j])
    ]
    return Graph(len(pairs), edges)


def h_ell_graph(k: int, ell: int) -> Graph:
    """K_{4k} plus adjacent vertices u = 4k, v = 4k+1.

    u is joined to clique vertices 0..ell-1 and v to clique vertices
    0..2k-ell-1.
    """
    if k < 1 or not 0 <= ell < k:
        raise ContractViolation("h_ell_graph needs k >= 1 and 0 <= ell < k")
    c = 4 * k
    u, v = c, c + 1
    edges = list(itertools.combinations(range(c), 2))
    edges.append((u, v))
    edges.extend((x, u) for x in range(ell))
    edges.extend((x, v) for x in range(2 * k - ell))
    return Graph(c + 2, edges)


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    return Graph(n, (e for e in itertools.combinations(range(n), 2) if rng.random() < p))


def random_connected_graph(n: int, p: float, rng: random.Random, *, tries: int = 1000) -> Graph:
    """Rejection-sample G(n, p) until connected."""
    for _ in range(tries):
        g = random_graph(n, p, rng)
        if g.is_connected():
            return g
    raise ContractViolation(f"no connected G({n}, {p}) sample in {tries} tries")


# ---------------------------------------------------------------- subgraphs


def _relabel(g: Graph, keep: Sequence[int], edges: Iterable[Edge]) -> tuple[Graph, tuple[int, ...]]:
    pos = {v: i for i, v in enumerate(keep)}
    return Graph(len(keep), ((pos[u], pos[v]) for u, v in edges)), tuple(keep)


def induced_subgraph(g: Graph, s: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """``<S>_G`` relabelled to ``0..|S|-1``; second item maps new labels back to G."""
    keep = sorted(set(s))
    if any(not 0 <= v < g.n for v in keep):
        raise ContractViolation("vertex set is not a subset of V(G)")
    ks = set(keep)
    return _relabel(g, keep, (e for e in g.edges if e[0] in ks and e[1] in ks))


def edge_induced(g: Graph, edges: Iterable[Sequence[int]]) -> tuple[Graph, tuple[int, ...]]:
    es = {edge_id(*e) for e in edges}
    if not es:
        raise ContractViolation("edge-induced subgraph needs a nonempty edge set")
    missing = es - g.edge_set
    if missing:
        raise ContractViolation(f"edges not in G: {sorted(missing)}")
    keep = sorted({v for e in es for v in e})
    return _relabel(g, keep, es)


def bipartite_induced(g: Graph, s1: Iterable[int], s2: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """``<S1, S2>_G``: vertices S1 ∪ S2, only the edges running between the parts."""
    a, b = set(s1), set(s2)
    if not a or not b:
        raise ContractViolation("both parts must be nonempty")
    if a & b:
        raise ContractViolation(f"parts overlap in {sorted(a & b)}")
    keep = sorted(a | b)
    between = (e for e in g.edges if (e[0] in a and e[1] in b) or (e[0] in b and e[1] in a))
    return _relabel(g, keep, between)


def delete_vertices(g: Graph, s: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    gone = set(s)
    if g.n and len(gone & set(range(g.n))) == g.n:
        raise ContractViolation("cannot delete every vertex")
    return induced_subgraph(g, (v for v in range(g.n) if v not in gone))


def delete_edges(g: Graph, f: Iterable[Sequence[int]]) -> Graph:
    gone = {edge_id(*e) for e in f}
    return Graph(g.n, (e for e in g.edges if e not in gone))


def drop_isolated(g: Graph) -> tuple[Graph, tuple[int, ...]]:
    return induced_subgraph(g, (v for v in range(g.n) if g.adj[v]))


def components(g: Graph) -> list[list[int]]:
    """Connected components as sorted vertex lists, ordered by smallest vertex."""
    seen = [False] * g.n
    out = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y in g.adj[x]:
                if not seen[y]:
                    seen[y] = True
                    comp.append(y)
                    queue.append(y)
        out.append(sorted(comp))
    return out


def has_cycle_component(g: Graph, comp: Iterable[int]) -> bool:
    c = set(comp)
    if not c or list(sorted(c)) not in components(g):
        raise ContractViolation("vertex set is not a component of G")
    edges = sum(len(g.adj[v]) for v in c) // 2
    return edges >= len(c)


def is_induced_path(g: Graph, s: Iterable[int]) -> bool:
    h, _ = induced_subgraph(g, s)
    if h.n == 0:
        return False
    if h.m != h.n - 1 or not h.is_connected():
        return False
    return h.max_degree <= 2


def spanning_tree_edges(g: Graph, vertices: Iterable[int] | None = None) -> list[Edge]:
    """Lowest-index-first BFS tree of ``<vertices>`` (default: all of G).

    The induced subgraph must be connected.
    """
    vs = set(range(g.n)) if vertices is None else set(vertices)
    if not vs:
        return []
    root = min(vs)
    seen = {root}
    queue = deque([root])
    tree = []
    while queue:
        x = queue.popleft()
        for y in sorted(g.adj[x]):
            if y in vs and y not in seen:
                seen.add(y)
                tree.append(edge_id(x, y))
                queue.append(y)
    if len(seen) != len(vs):
        raise ContractViolation("vertex set does not induce a connected subgraph")
    return tree


def is_spanning_tree(n: int, edges: Iterable[Edge]) -> bool:
    es = list(edges)
    if len(es) != max(n - 1, 0):
        return False
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in es:
        ru, rv = find(u), find(v)
        if ru == rv:
            return False
        parent[ru] = rv
    return True


def shift_edges(edges: Iterable[Edge], n: int, by: int = 1) -> frozenset[Edge]:
    """Rotate every vertex label by ``by`` modulo n."""
    return frozenset(edge_id((u + by) % n, (v + by) % n) for u, v in edges)
