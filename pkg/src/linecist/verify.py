"""Independent checks of claimed structures, exact connected domination and small-graph oracles."""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable

from .errors import ContractViolation
from .graph import Edge, Graph, bipartite_induced, components, induced_subgraph


@dataclass(frozen=True)
class Failure:
    clause: str
    where: tuple
    message: str

    def to_json(self) -> dict:
        return {"clause": self.clause, "where": [_plain(x) for x in self.where], "message": self.message}


def _plain(x):
    if isinstance(x, (set, frozenset)):
        return sorted(x)
    return x


@dataclass
class VerificationReport:
    failures: list[Failure] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def fail(self, clause: str, where: tuple, message: str) -> None:
        self.failures.append(Failure(clause, where, message))

    def clauses(self) -> set[str]:
        return {f.clause for f in self.failures}

    def summary(self) -> str:
        if self.ok:
            return "ok"
        return "; ".join(f"{f.clause}: {f.message}" for f in self.failures[:5])

    def to_json(self) -> dict:
        return {"ok": self.ok, "failures": [f.to_json() for f in self.failures]}


def _tree_check(g: Graph, i: int, tree: frozenset[Edge], report: VerificationReport) -> None:
    bad = sorted(e for e in tree if e not in g.edge_set)
    if bad:
        report.fail("edge-not-in-graph", (i,), f"tree {i} uses non-edges {bad[:5]}")
        return
    parent = list(range(g.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in sorted(tree):
        ru, rv = find(u), find(v)
        if ru == rv:
            report.fail("acyclic", (i, (u, v)), f"tree {i} has a cycle through edge {(u, v)}")
            break
        parent[ru] = rv
    if g.n and len({find(v) for v in range(g.n)}) > 1:
        report.fail("spanning", (i,), f"tree {i} does not connect all {g.n} vertices")


def is_cist_family(g: Graph, fam) -> VerificationReport:
    """Check spanning trees, pairwise edge-disjointness and disjoint internal vertex sets."""
    from .construct import internal_vertices

    report = VerificationReport()
    trees = list(fam.trees)
    claimed = list(fam.internal) if getattr(fam, "internal", None) is not None else None
    for i, t in enumerate(trees):
        _tree_check(g, i, t, report)
    actual = [internal_vertices(g.n, t) for t in trees]
    if claimed is not None:
        if len(claimed) != len(trees):
            report.fail("internal-consistency", (), "number of internal sets differs from number of trees")
        else:
            for i, (c, a) in enumerate(zip(claimed, actual)):
                if set(c) != a:
                    report.fail(
                        "internal-consistency", (i,),
                        f"tree {i}: claimed internal set differs from degree >= 2 vertices",
                    )
    for i, j in itertools.combinations(range(len(trees)), 2):
        shared = trees[i] & trees[j]
        if shared:
            report.fail("edge-disjoint", (i, j), f"trees {i} and {j} share edges {sorted(shared)[:5]}")
        common = actual[i] & actual[j]
        if common:
            report.fail(
                "internal-disjoint", (i, j),
                f"trees {i} and {j} share internal vertices {sorted(common)[:5]}",
            )
    return report


def is_dominating(g: Graph, s: Iterable[int]) -> bool:
    mask = 0
    for v in s:
        mask |= g.closed_masks[v]
    return mask == (1 << g.n) - 1


def is_connected_dominating_set(g: Graph, s: Iterable[int]) -> bool:
    ss = set(s)
    return bool(ss) and induced_subgraph(g, ss)[0].is_connected() and is_dominating(g, ss)


def is_valid_cds_family(g: Graph, fam) -> VerificationReport:
    """Disjoint connected dominating sets whose pairwise bipartite subgraphs have no tree component."""
    report = VerificationReport()
    sets = [frozenset(s) for s in (fam.sets if hasattr(fam, "sets") else fam)]
    for i, s in enumerate(sets):
        if not s:
            report.fail("nonempty", (i,), f"set {i} is empty")
            continue
        if any(not 0 <= v < g.n for v in s):
            report.fail("vertex-range", (i,), f"set {i} has vertices outside the graph")
            return report
        if not induced_subgraph(g, s)[0].is_connected():
            report.fail("connected", (i,), f"<V_{i}> is disconnected")
        mask = 0
        for v in s:
            mask |= g.closed_masks[v]
        missing = [v for v in range(g.n) if not mask >> v & 1]
        if missing:
            report.fail("dominating", (i, missing[0]), f"vertex {missing[0]} has no neighbour in V_{i}")
    for i, j in itertools.combinations(range(len(sets)), 2):
        if sets[i] & sets[j]:
            report.fail("disjoint", (i, j), f"V_{i} and V_{j} share {sorted(sets[i] & sets[j])[:5]}")
    if not report.ok:
        return report
    for i, j in itertools.combinations(range(len(sets)), 2):
        bip, orig = bipartite_induced(g, sets[i], sets[j])
        for comp in components(bip):
            edges = sum(bip.degree(v) for v in comp) // 2
            if edges < len(comp):
                report.fail(
                    "cycle", (i, j, frozenset(orig[v] for v in comp)),
                    f"a component of <V_{i}, V_{j}> on {len(comp)} vertices is a tree",
                )
    return report


# ---------------------------------------------------------- domination


def _cds_of_size(g: Graph, size: int) -> frozenset[int] | None:
    """Some connected dominating set of exactly ``size`` vertices, or None.

    Connected vertex sets are enumerated once each (ESU: every set is grown
    from its smallest vertex through exclusive neighbourhoods).
    """
    n = g.n
    full = (1 << n) - 1
    nbr = g.nbr_masks
    closed = g.closed_masks
    reach = max(bin(c).count("1") for c in closed)

    def extend(sub: int, ext: int, dom: int, depth: int, gt: int) -> int | None:
        left = size - depth
        undominated = full & ~dom
        if left == 1:
            while ext:
                low = ext & -ext
                w = low.bit_length() - 1
                if closed[w] & undominated == undominated:
                    return sub | low
                ext ^= low
            return None
        if bin(undominated).count("1") > left * reach:
            return None
        while ext:
            low = ext & -ext
            w = low.bit_length() - 1
            ext ^= low
            excl = nbr[w] & ~dom & gt
            found = extend(sub | low, ext | excl, dom | closed[w], depth + 1, gt)
            if found is not None:
                return found
        return None

    for v in range(n):
        gt = full & ~((1 << (v + 1)) - 1)
        if size == 1:
            if closed[v] == full:
                return frozenset([v])
            continue
        found = extend(1 << v, nbr[v] & gt, closed[v], 1, gt)
        if found is not None:
            return frozenset(x for x in range(n) if found >> x & 1)
    return None


def minimum_connected_dominating_set(g: Graph) -> frozenset[int]:
    if g.n == 0 or not g.is_connected():
        raise ContractViolation("connected domination needs a connected nonempty graph")
    for size in range(1, g.n + 1):
        found = _cds_of_size(g, size)
        if found is not None:
            return found
    raise AssertionError("V(G) is always a connected dominating set")


def connected_domination_number(g: Graph) -> int:
    return len(minimum_connected_dominating_set(g))


def connected_domination_number_naive(g: Graph) -> int:
    """gamma_c by trying every subset in order of size; oracle for small graphs."""
    if g.n > 20:
        raise ContractViolation("naive gamma_c is limited to 20 vertices")
    if g.n == 0 or not g.is_connected():
        raise ContractViolation("connected domination needs a connected nonempty graph")
    for size in range(1, g.n + 1):
        for s in itertools.combinations(range(g.n), size):
            if is_connected_dominating_set(g, s):
                return size
    raise AssertionError("unreachable")


@dataclass(frozen=True)
class UpperBounds:
    degree: int
    density: int
    domination: int

    @property
    def best(self) -> int:
        return min(self.degree, self.density, self.domination)

    def to_json(self) -> dict:
        return {
            "degreeBound": self.degree,
            "densityBound": self.density,
            "dominationBound": self.domination,
            "min": self.best,
        }


def cist_upper_bounds(g: Graph, gamma_c: int | None = None) -> UpperBounds:
    """Degree, edge-density and n / gamma_c bounds on the number of CISTs."""
    if g.n < 2 or not g.is_connected():
        raise ContractViolation("upper bounds need a connected graph on >= 2 vertices")
    if gamma_c is None:
        gamma_c = connected_domination_number(g)
    return UpperBounds(g.min_degree, g.m // (g.n - 1), g.n // gamma_c)


# ---------------------------------------------------------- brute force


def _no_tree_component(g: Graph, a: frozenset[int], b: frozenset[int]) -> bool:
    bip, _ = bipartite_induced(g, a, b)
    for comp in components(bip):
        if sum(bip.degree(v) for v in comp) // 2 < len(comp):
            return False
    return True


def _set_partitions(n: int, k: int):
    """Restricted-growth labellings of 0..n-1 with exactly k blocks (vertex 0 in block 0)."""
    labels = [0] * n

    def rec(i: int, used: int):
        if n - i < k - used:
            return
        if i == n:
            if used == k:
                yield labels
            return
        for b in range(min(used + 1, k)):
            labels[i] = b
            yield from rec(i + 1, max(used, b + 1))

    if n == 0:
        return
    yield from rec(1, 1)


@dataclass(frozen=True)
class OracleResult:
    exists: bool
    witness: tuple[frozenset[int], ...] | None
    checked: int

    def to_json(self) -> dict:
        return {
            "exists": self.exists,
            "witness": None if self.witness is None else [sorted(s) for s in self.witness],
            "partitionsChecked": self.checked,
        }


def cist_exists_bruteforce(g: Graph, k: int, cap: int = 16) -> OracleResult:
    """Search for a CIST-partition of V(G) into k parts.

    Parts must each induce a connected subgraph and no bipartite subgraph
    between two parts may have a tree component.
    """
    if g.n > cap:
        raise ContractViolation(f"{g.n} vertices exceeds the oracle cap of {cap}")
    if k < 1:
        raise ContractViolation("k must be positive")
    checked = 0
    if k > g.n:
        return OracleResult(False, None, 0)
    for labels in _set_partitions(g.n, k):
        checked += 1
        parts = [set() for _ in range(k)]
        for v, b in enumerate(labels):
            parts[b].add(v)
        fparts = tuple(frozenset(p) for p in parts)
        if not all(induced_subgraph(g, p)[0].is_connected() for p in fparts):
            continue
        if all(_no_tree_component(g, fparts[i], fparts[j]) for i, j in itertools.combinations(range(k), 2)):
            return OracleResult(True, fparts, checked)
    return OracleResult(False, None, checked)


def cds_family_exists_bruteforce(g: Graph, k: int, cap: int = 12) -> tuple[frozenset[int], ...] | None:
    """Exhaustively search k disjoint connected dominating sets with the pairwise cycle condition."""
    if g.n > cap:
        raise ContractViolation(f"{g.n} vertices exceeds the cap of {cap}")
    cds = [
        frozenset(s)
        for size in range(1, g.n + 1)
        for s in itertools.combinations(range(g.n), size)
        if is_connected_dominating_set(g, s)
    ]

    def rec(start: int, chosen: list[frozenset[int]]):
        if len(chosen) == k:
            return tuple(chosen)
        for idx in range(start, len(cds)):
            c = cds[idx]
            if any(c & x for x in chosen):
                continue
            if not all(_no_tree_component(g, x, c) for x in chosen):
                continue
            found = rec(idx + 1, chosen + [c])
            if found is not None:
                return found
        return None

    return rec(0, [])
