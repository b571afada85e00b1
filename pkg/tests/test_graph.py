import itertools
import random

import pytest

from linecist.errors import ContractViolation
from linecist.graph import (
    Graph,
    bipartite_induced,
    complete_graph,
    components,
    cycle_graph,
    delete_vertices,
    edge_id,
    edge_induced,
    h_ell_graph,
    has_cycle_component,
    induced_subgraph,
    is_induced_path,
    is_spanning_tree,
    line_graph,
    path_graph,
    petersen_graph,
    random_connected_graph,
    spanning_tree_edges,
    star_graph,
)


def test_edge_id_canonical():
    assert edge_id(3, 1) == (1, 3)
    with pytest.raises(ContractViolation):
        edge_id(2, 2)


def test_graph_rejects_bad_edges():
    with pytest.raises(ContractViolation):
        Graph(3, [(0, 3)])
    with pytest.raises(ContractViolation):
        Graph(3, [(1, 1)])


@pytest.mark.parametrize("n,m", [(1, 0), (4, 6), (7, 21)])
def test_complete_graph_sizes(n, m):
    g = complete_graph(n)
    assert g.m == m
    assert all(g.degree(v) == n - 1 for v in range(n))


def test_line_graph_of_triangle_and_star():
    lt = line_graph(complete_graph(3))
    assert lt.line == complete_graph(3)
    assert line_graph(star_graph(5)).line == complete_graph(5)


def test_line_graph_of_k4_is_4_regular():
    lg = line_graph(complete_graph(4))
    assert lg.line.n == 6
    assert {lg.line.degree(v) for v in range(6)} == {4}
    assert list(lg.labels) == sorted(lg.labels)


def test_line_graph_invariants_random():
    rng = random.Random(7)
    for _ in range(40):
        g = random_connected_graph(rng.randint(2, 9), rng.uniform(0.2, 0.9), rng)
        lg = line_graph(g)
        assert lg.line.n == g.m
        assert sum(lg.line.degree(x) for x in range(lg.line.n)) == 2 * lg.line.m
        for x, (u, v) in enumerate(lg.labels):
            assert lg.line.degree(x) == g.degree(u) + g.degree(v) - 2
        for a, b in itertools.combinations(range(lg.line.n), 2):
            share = bool(set(lg.labels[a]) & set(lg.labels[b]))
            assert lg.line.has_edge(a, b) == share


def test_line_graph_commutes_with_vertex_deletion():
    rng = random.Random(11)
    for _ in range(25):
        g = random_connected_graph(rng.randint(3, 8), 0.5, rng)
        s = set(rng.sample(range(g.n), rng.randint(1, g.n - 1)))
        h, orig = delete_vertices(g, s)
        lh = line_graph(h)
        lifted = sorted(edge_id(orig[a], orig[b]) for a, b in lh.labels)
        lg = line_graph(g)
        keep = [x for x, e in enumerate(lg.labels) if not set(e) & s]
        assert lifted == [lg.labels[x] for x in keep]
        sub, _ = induced_subgraph(lg.line, keep)
        assert sub == lh.line


def test_subgraph_operations():
    k4 = complete_graph(4)
    assert induced_subgraph(k4, {0, 1})[0].m == 1
    bip, orig = bipartite_induced(k4, {0, 1}, {2, 3})
    assert bip == cycle_graph(4) or (bip.m == 4 and {bip.degree(v) for v in range(4)} == {2})
    assert orig == (0, 1, 2, 3)
    p, _ = edge_induced(cycle_graph(5), [(0, 1), (1, 2)])
    assert p.n == 3 and p.m == 2
    with pytest.raises(ContractViolation):
        bipartite_induced(k4, {0, 1}, {1, 2})


def test_bipartite_induced_matches_filtering():
    rng = random.Random(3)
    for _ in range(30):
        g = random_connected_graph(8, 0.5, rng)
        verts = list(range(8))
        rng.shuffle(verts)
        a, b = set(verts[:3]), set(verts[3:6])
        bip, orig = bipartite_induced(g, a, b)
        got = {edge_id(orig[x], orig[y]) for x, y in bip.edges}
        want = {e for e in g.edges if (e[0] in a and e[1] in b) or (e[0] in b and e[1] in a)}
        assert got == want


def test_components_and_cycles():
    g = Graph(9, [(0, 1), (1, 2), (2, 3), (3, 4), (5, 6), (6, 7), (7, 8), (8, 5)])
    comps = components(g)
    assert comps == [[0, 1, 2, 3, 4], [5, 6, 7, 8]]
    assert not has_cycle_component(g, comps[0])
    assert has_cycle_component(g, comps[1])
    uni = Graph(6, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5)])
    assert has_cycle_component(uni, range(6))
    with pytest.raises(ContractViolation):
        has_cycle_component(g, [0, 1])


def test_delete_and_induced_path():
    c5 = cycle_graph(5)
    h, _ = delete_vertices(c5, [0])
    assert h == path_graph(4)
    with pytest.raises(ContractViolation):
        delete_vertices(c5, range(5))
    c6 = cycle_graph(6)
    assert is_induced_path(c6, [0, 1, 2])
    assert not is_induced_path(cycle_graph(4), [0, 2])
    assert is_induced_path(c6, [4])


def test_generators():
    p = petersen_graph()
    assert p.n == 10 and p.m == 15 and {p.degree(v) for v in range(10)} == {3}
    h = h_ell_graph(2, 1)
    assert h.n == 10
    assert h.has_edge(8, 9)
    assert h.degree(8) == 2 and h.degree(9) == 4


def test_spanning_tree_helpers():
    g = petersen_graph()
    t = spanning_tree_edges(g)
    assert is_spanning_tree(g.n, t)
    assert not is_spanning_tree(4, [(0, 1), (1, 2), (0, 2)])
