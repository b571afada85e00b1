"""Constructions of completely independent spanning trees.

``cds_to_cists`` turns disjoint connected dominating sets with the pairwise
cycle condition into trees; the ``line_cists*`` functions build such sets in
a line graph from a spanning tree packing of the base graph.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import ContractViolation, Infeasible, ValidationError
from .graph import (
    Edge,
    Graph,
    LineGraph,
    bipartite_induced,
    components,
    delete_edges,
    delete_vertices,
    edge_id,
    line_graph,
    spanning_tree_edges,
)
from .packing import tau_prime, tree_packing, zeta


@dataclass(frozen=True)
class CdsFamily:
    graph: Graph
    sets: tuple[frozenset[int], ...]

    @classmethod
    def of(cls, graph: Graph, sets: Iterable[Iterable[int]]) -> "CdsFamily":
        return cls(graph, tuple(frozenset(s) for s in sets))

    def __len__(self) -> int:
        return len(self.sets)

    def to_json(self, lg: LineGraph | None = None) -> dict:
        if lg is None:
            return {"kind": "graph", "sets": [sorted(s) for s in self.sets]}
        return {
            "kind": "line",
            "base_edges": [list(e) for e in lg.base.edges],
            "sets": [sorted(list(lg.labels[x]) for x in s) for s in self.sets],
        }


@dataclass(frozen=True)
class CistFamily:
    graph: Graph
    trees: tuple[frozenset[Edge], ...]
    internal: tuple[frozenset[int], ...]
    line: LineGraph | None = None

    def __len__(self) -> int:
        return len(self.trees)

    @classmethod
    def from_trees(cls, graph: Graph, trees: Iterable[Iterable[Edge]], line: LineGraph | None = None):
        ts = tuple(frozenset(edge_id(*e) for e in t) for t in trees)
        return cls(graph, ts, tuple(internal_vertices(graph.n, t) for t in ts), line)

    def to_json(self) -> dict:
        lg = self.line
        if lg is None:
            return {
                "kind": "graph",
                "n": self.graph.n,
                "trees": [sorted(list(e) for e in t) for t in self.trees],
                "internal": [sorted(s) for s in self.internal],
            }

        def lab(x: int) -> list[int]:
            return list(lg.labels[x])

        return {
            "kind": "line",
            "base_n": lg.base.n,
            "base_edges": [list(e) for e in lg.base.edges],
            "trees": [sorted(sorted([lab(a), lab(b)]) for a, b in t) for t in self.trees],
            "internal": [sorted(lab(x) for x in s) for s in self.internal],
        }


def internal_vertices(n: int, tree: Iterable[Edge]) -> frozenset[int]:
    deg = [0] * n
    for u, v in tree:
        deg[u] += 1
        deg[v] += 1
    return frozenset(v for v in range(n) if deg[v] >= 2)


def orient_unicyclic(u: Graph) -> dict[int, int]:
    """Map every vertex of a unicyclic graph to its single out-neighbour.

    The cycle is directed (starting at its smallest vertex towards its
    smaller cycle neighbour) and every other edge points towards the cycle.
    """
    if u.n == 0 or u.m != u.n or not u.is_connected():
        raise ContractViolation("orient_unicyclic needs a connected graph with |E| = |V|")
    deg = [u.degree(v) for v in range(u.n)]
    alive = [True] * u.n
    out: dict[int, int] = {}
    leaves = [v for v in range(u.n) if deg[v] == 1]
    while leaves:
        x = leaves.pop()
        alive[x] = False
        (y,) = [w for w in u.adj[x] if alive[w]]
        out[x] = y
        deg[y] -= 1
        if deg[y] == 1:
            leaves.append(y)
    cycle = [v for v in range(u.n) if alive[v]]
    start = cycle[0]
    prev, cur = start, min(w for w in u.adj[start] if alive[w])
    out[start] = cur
    while cur != start:
        (nxt,) = [w for w in u.adj[cur] if alive[w] and w != prev]
        out[cur] = nxt
        prev, cur = cur, nxt
    return out


def _unicyclic_orientation(g: Graph, a: frozenset[int], b: frozenset[int]) -> dict[int, int]:
    """Out-neighbour map over <A, B>_G from a spanning unicyclic subgraph of each component."""
    bip, orig = bipartite_induced(g, a, b)
    out: dict[int, int] = {}
    for comp in components(bip):
        tree = spanning_tree_edges(bip, comp)
        cs = set(comp)
        tset = set(tree)
        extra = [e for e in bip.edges if e[0] in cs and e not in tset]
        if not extra:
            raise ValidationError(
                f"component {[orig[v] for v in comp]} of <V_i, V_j> is a tree"
            )
        uni, back = _sub(bip, comp, tree + [min(extra)])
        for x, y in orient_unicyclic(uni).items():
            out[orig[back[x]]] = orig[back[y]]
    return out


def _sub(g: Graph, vertices: Sequence[int], edges: Iterable[Edge]) -> tuple[Graph, tuple[int, ...]]:
    keep = sorted(vertices)
    pos = {v: i for i, v in enumerate(keep)}
    return Graph(len(keep), ((pos[x], pos[y]) for x, y in edges)), tuple(keep)


def cds_to_cists(g: Graph, family: CdsFamily | Iterable[Iterable[int]], *, line: LineGraph | None = None) -> CistFamily:
    """Build k CISTs whose internal vertices lie in the respective dominating sets."""
    from .verify import is_valid_cds_family

    fam = family if isinstance(family, CdsFamily) else CdsFamily.of(g, family)
    report = is_valid_cds_family(g, fam)
    if not report.ok:
        raise ValidationError(f"invalid CDS family: {report.summary()}", report)
    sets = fam.sets
    k = len(sets)
    trees: list[set[Edge]] = [set(spanning_tree_edges(g, s)) for s in sets]
    owner = {v: i for i, s in enumerate(sets) for v in s}
    for i in range(k):
        for j in range(i + 1, k):
            out = _unicyclic_orientation(g, sets[i], sets[j])
            from_i = {edge_id(x, y) for x, y in out.items() if owner[x] == i}
            from_j = {edge_id(x, y) for x, y in out.items() if owner[x] == j}
            assert not from_i & from_j
            # x in V_i pointing into V_j is x's attachment in tree j, and vice versa
            trees[j] |= from_i
            trees[i] |= from_j
    for w in range(g.n):
        if w in owner:
            continue
        for i, s in enumerate(sets):
            trees[i].add(edge_id(w, min(x for x in g.adj[w] if x in s)))
    return CistFamily.from_trees(g, trees, line)


# ------------------------------------------------------------ line graphs


def _check_case1(g: Graph, s: frozenset[int]) -> None:
    if any(g.has_edge(x, y) for x in s for y in s if x < y):
        raise ContractViolation("Case 1 needs S to be independent")
    if len(s) >= g.n:
        raise ContractViolation("S must be a proper subset of V(G)")


def _packing_outside(g: Graph, s: frozenset[int], k: int) -> list[frozenset[Edge]]:
    h, orig = delete_vertices(g, s)
    fam = tree_packing(h, k)
    return [frozenset(edge_id(orig[a], orig[b]) for a, b in t) for t in fam.trees]


def _case1_from_trees(g: Graph, trees: list[frozenset[Edge]]) -> CistFamily:
    from .verify import is_valid_cds_family

    lg = line_graph(g)
    fam = CdsFamily.of(lg.line, (lg.vertices_of(t) for t in trees))
    report = is_valid_cds_family(lg.line, fam)
    if not report.ok:
        raise ValidationError(
            "edge sets of a tree packing failed the dominating-set cycle condition: "
            + report.summary(),
            report,
        )
    return cds_to_cists(lg.line, fam, line=lg)


def line_cists_case1(g: Graph, s: Iterable[int] = (), k: int | None = None) -> CistFamily:
    """k CISTs in L(G) from k edge-disjoint spanning trees of G - S (S independent).

    With k omitted, tau(G - S) trees are used.
    """
    ss = frozenset(s)
    _check_case1(g, ss)
    if k is None:
        from .packing import tau

        h, _ = delete_vertices(g, ss)
        k = tau(h)
    if k < 1:
        raise Infeasible("G - S has no spanning tree")
    return _case1_from_trees(g, _packing_outside(g, ss, k))


def _star_orientation(g: Graph, s: frozenset[int]) -> list[tuple[int, int]]:
    """Edges uv of <S> as (u, v) with v of degree 1 in <S>; for a K_2 component u < v."""
    deg = {x: sum(1 for y in g.adj[x] if y in s) for x in s}
    out = []
    for a, b in g.edges:
        if a in s and b in s:
            if deg[b] == 1:
                out.append((a, b))
            elif deg[a] == 1:
                out.append((b, a))
            else:
                raise ContractViolation("S is not a star-subset")
    return out


def line_cists_case2(g: Graph, s: Iterable[int]) -> CistFamily:
    """min(tau(G - S), zeta(S)) CISTs in L(G) for a star-subset S spanning edges."""
    from .packing import is_star_subset

    ss = frozenset(s)
    if not ss or len(ss) >= g.n:
        raise ContractViolation("S must be a nonempty proper subset of V(G)")
    if not is_star_subset(g, ss):
        raise ContractViolation("S is not a star-subset")
    z = zeta(g, ss)
    if z == float("inf"):
        raise ContractViolation("<S> has no edges; use line_cists_case1")
    from .packing import max_tree_packing

    h, orig = delete_vertices(g, ss)
    packing = max_tree_packing(h)
    t = len(packing)
    count = int(min(t, z))
    if count < 1:
        raise Infeasible("min(tau(G - S), zeta(S)) is 0")
    inner = [(a, b) for a, b in g.edges if a in ss and b in ss]
    trees = [frozenset(edge_id(orig[a], orig[b]) for a, b in tr) for tr in packing.trees][:count]

    # Case 1 on G with the edges inside S removed: S is independent there.
    g1 = delete_edges(g, inner)
    base = _case1_from_trees(g1, trees)
    lg1 = base.line
    lg = line_graph(g)
    lab = lg.vertex_of

    def outside(w: int) -> list[int]:
        return sorted(x for x in g.adj[w] if x not in ss)

    new_trees = []
    for idx, tree in enumerate(base.trees):
        i = idx + 1
        lifted = {edge_id(lab(lg1.labels[a]), lab(lg1.labels[b])) for a, b in tree}
        for u, v in _star_orientation(g, ss):
            fu = outside(u)
            a = min(t, len(fu))
            if i <= a:
                anchor = (u, fu[i - 1])
            else:
                anchor = (v, outside(v)[i - a - 1])
            lifted.add(edge_id(lab((u, v)), lab(anchor)))
        new_trees.append(lifted)
    return CistFamily.from_trees(lg.line, new_trees, lg)


def line_cists(g: Graph, size_cap: int | None = None) -> CistFamily:
    """tau'(G) completely independent spanning trees of L(G)."""
    if not g.is_connected() or g.m < 2:
        raise ContractViolation("line_cists needs a connected graph with at least two edges")
    res = tau_prime(g, size_cap, check_cap=False)
    w = res.witness
    if w.zeta == float("inf"):
        return line_cists_case1(g, w.s, res.value)
    return line_cists_case2(g, w.s)


def cists_for_star(g: Graph, k: int) -> CistFamily:
    """k CISTs in L(K_{1,r}) = K_r from k disjoint vertex pairs."""
    lg = line_graph(g)
    if 2 * k > lg.line.n:
        raise Infeasible(f"K_{lg.line.n} has no {k} disjoint vertex pairs")
    pairs = [{2 * i, 2 * i + 1} for i in range(k)]
    return cds_to_cists(lg.line, pairs, line=lg)
