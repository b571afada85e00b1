"""Explicit floor((n+1)/2) CISTs in L(K_n) and their survival under vertex / induced-path deletion."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator

from .construct import CdsFamily, CistFamily, cds_to_cists
from .errors import ContractViolation, Infeasible, ValidationError
from .graph import Edge, Graph, LineGraph, complete_graph, delete_edges, edge_id, line_graph

_SMALL_TABLES: dict[int, list[list[Edge]]] = {
    4: [[(0, 1), (1, 3), (2, 3)], [(0, 2), (1, 2)]],
    5: [[(0, 1), (1, 4), (2, 4)], [(1, 2), (0, 2), (0, 3)], [(2, 3), (3, 4), (0, 4)]],
    6: [
        [(0, 1), (1, 5), (2, 5), (2, 4)],
        [(1, 2), (0, 2), (0, 3), (3, 5)],
        [(2, 3), (1, 3), (1, 4), (0, 4)],
    ],
}


def zigzag_order(n: int, i: int) -> list[int]:
    """Vertex order i, i+1, i-1, i+2, i-2, ... (mod n) of the zig-zag path, n - 1 vertices."""
    seq = [i % n]
    step = 1
    while len(seq) < n - 1:
        seq.append((i + step) % n)
        if len(seq) < n - 1:
            seq.append((i - step) % n)
        step += 1
    return seq


def zigzag_tree(n: int, i: int) -> frozenset[Edge]:
    """Hamiltonian path of K_n - v_{i + floor((n+1)/2)} drawn zig-zag across the n-gon."""
    if n < 7:
        raise ContractViolation("zig-zag trees are defined for n >= 7")
    if not 0 <= i < n // 2:
        raise ContractViolation(f"tree index must lie in 0..{n // 2 - 1}")
    seq = zigzag_order(n, i)
    return frozenset(edge_id(a, b) for a, b in zip(seq, seq[1:]))


def odd_extra_tree(n: int) -> frozenset[Edge]:
    """For odd n: every edge not on a zig-zag path, except v_{n-1} v_0."""
    if n < 7 or n % 2 == 0:
        raise ContractViolation("the extra tree exists for odd n >= 7")
    used = set().union(*(zigzag_tree(n, i) for i in range(n // 2)))
    rest = set(itertools.combinations(range(n), 2)) - used
    rest.discard((0, n - 1))
    return frozenset(rest)


@dataclass(frozen=True)
class LknFamily:
    n: int
    cds_sets: tuple[frozenset[Edge], ...]
    spare: frozenset[Edge]

    def line(self) -> LineGraph:
        return line_graph(complete_graph(self.n))

    def cds_family(self, lg: LineGraph | None = None) -> CdsFamily:
        lg = lg or self.line()
        return CdsFamily.of(lg.line, (lg.vertices_of(s) for s in self.cds_sets))

    def permuted(self, sigma: list[int]) -> "LknFamily":
        def img(es: Iterable[Edge]) -> frozenset[Edge]:
            return frozenset(edge_id(sigma[u], sigma[v]) for u, v in es)

        return LknFamily(self.n, tuple(img(s) for s in self.cds_sets), img(self.spare))

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "cdsSets": [sorted(list(e) for e in s) for s in self.cds_sets],
            "spare": sorted(list(e) for e in self.spare),
        }


def lkn_family(n: int) -> LknFamily:
    if n < 4:
        raise ContractViolation("L(K_n) families are defined for n >= 4")
    if n in _SMALL_TABLES:
        sets = [frozenset(edge_id(*e) for e in s) for s in _SMALL_TABLES[n]]
    else:
        sets = [zigzag_tree(n, i) for i in range(n // 2)]
        if n % 2:
            sets.append(odd_extra_tree(n))
    used = frozenset().union(*sets)
    spare = frozenset(itertools.combinations(range(n), 2)) - used
    return LknFamily(n, tuple(sets), spare)


def lkn_cists(n: int) -> CistFamily:
    fam = lkn_family(n)
    lg = fam.line()
    return cds_to_cists(lg.line, fam.cds_family(lg), line=lg)


# ------------------------------------------------------------ deletion


def spare_path(n: int) -> list[int]:
    """Vertex sequence of the unused edges of the family (a single edge for n = 4 and odd n)."""
    fam = lkn_family(n)
    if len(fam.spare) == 1:
        (e,) = fam.spare
        return list(e)
    h = Graph(n, fam.spare)
    ends = [v for v in range(n) if h.degree(v) == 1]
    if len(ends) != 2:
        raise AssertionError("spare edges do not form a path")
    start = min(ends)
    seq = [start]
    prev = None
    while True:
        nxt = [w for w in h.adj[seq[-1]] if w != prev]
        if not nxt:
            break
        prev = seq[-1]
        seq.append(nxt[0])
    return seq


def _path_vertices(edges: list[Edge]) -> list[int] | None:
    """Vertex sequence of a simple path formed by ``edges``, or None."""
    if len(edges) == 1:
        return list(edges[0])
    h_adj: dict[int, set[int]] = {}
    for u, v in edges:
        h_adj.setdefault(u, set()).add(v)
        h_adj.setdefault(v, set()).add(u)
    if len(h_adj) != len(edges) + 1 or any(len(a) > 2 for a in h_adj.values()):
        return None
    ends = sorted(v for v, a in h_adj.items() if len(a) == 1)
    if len(ends) != 2:
        return None
    seq, prev = [ends[0]], None
    while len(seq) <= len(edges):
        nxt = [w for w in h_adj[seq[-1]] if w != prev]
        if not nxt:
            break
        prev = seq[-1]
        seq.append(nxt[0])
    return seq if len(seq) == len(edges) + 1 else None


def find_sigma(n: int, deleted: Iterable[Edge]) -> list[int]:
    """Vertex permutation sending the deleted base edges into the spare set."""
    d = sorted({edge_id(*e) for e in deleted})
    if not d:
        return list(range(n))
    target = spare_path(n)
    seq = _path_vertices(d)
    if seq is None:
        raise Infeasible(f"deleted edges {d} do not form a path in K_{n}")
    if len(seq) > len(target):
        raise Infeasible(f"path of order {len(d)} is longer than the spare path of order {len(target) - 1}")
    sigma = [-1] * n
    for a, b in zip(seq, target):
        sigma[a] = b
    free = iter(sorted(set(range(n)) - set(target[: len(seq)])))
    for v in range(n):
        if sigma[v] < 0:
            sigma[v] = next(free)
    return sigma


def lkn_fault_survivors(n: int, deleted: Iterable[Iterable[int]]) -> CistFamily:
    """floor((n+1)/2) CISTs in L(K_n) - D, D a deleted vertex or (even n >= 6) induced path.

    ``deleted`` lists line vertices by their base edges. The family is
    re-validated on the deleted graph; an unmappable D raises Infeasible.
    """
    if n < 4:
        raise ContractViolation("n must be at least 4")
    d = sorted({edge_id(*e) for e in deleted})
    if len(d) >= n * (n - 1) // 2:
        raise ContractViolation("cannot delete every line vertex")
    full = line_graph(complete_graph(n))
    if n % 2 or n == 4:
        if len(d) > 1:
            raise ContractViolation("for n = 4 and odd n only a single line vertex may be deleted")
    elif d:
        from .graph import is_induced_path

        if len(d) > n // 2 or not is_induced_path(full.line, full.vertices_of(d)):
            raise ContractViolation(f"D must induce a path of order <= {n // 2} in L(K_{n})")
    sigma = find_sigma(n, d)
    inverse = [0] * n
    for v, image in enumerate(sigma):
        inverse[image] = v
    # sigma moves D into the spare set, so the family pulled back by sigma spares D
    fam = lkn_family(n).permuted(inverse)
    if not set(d) <= fam.spare:
        raise Infeasible(f"permutation {sigma} does not move D into the spare set")
    lg = line_graph(delete_edges(complete_graph(n), d))
    try:
        out = cds_to_cists(lg.line, fam.cds_family(lg), line=lg)
    except ValidationError as exc:
        raise Infeasible(f"family after deleting {d} is not valid: {exc}") from exc
    return out


def induced_paths_lkn(n: int, max_order: int) -> Iterator[list[Edge]]:
    """All induced paths of L(K_n) with at most ``max_order`` vertices, as base-edge lists.

    Found by DFS in L(K_n) itself; each path is reported once (from its
    smaller end).
    """
    lg = line_graph(complete_graph(n))
    g = lg.line
    for start in range(g.n):
        stack = [(start,)]
        while stack:
            path = stack.pop()
            if len(path) == 1 or path[0] < path[-1]:
                yield [lg.labels[x] for x in path]
            if len(path) == max_order:
                continue
            last = path[-1]
            for y in g.adj[last]:
                if y in path:
                    continue
                if any(g.has_edge(y, x) for x in path[:-1]):
                    continue
                stack.append(path + (y,))
