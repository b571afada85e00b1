import pytest

from linecist.construct import (
    CdsFamily,
    cds_to_cists,
    cists_for_star,
    internal_vertices,
    line_cists,
    line_cists_case1,
    line_cists_case2,
    orient_unicyclic,
)
from linecist.errors import ContractViolation, Infeasible, ValidationError
from linecist.graph import Graph, complete_graph, cycle_graph, h_ell_graph, line_graph, petersen_graph, star_graph
from linecist.packing import tau_prime
from linecist.verify import cist_upper_bounds, is_cist_family

from conftest import random_corpus


def test_orient_unicyclic_outdegree_one():
    g = Graph(6, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (1, 5)])
    out = orient_unicyclic(g)
    assert sorted(out) == list(range(6))
    assert all(g.has_edge(x, y) for x, y in out.items())
    assert len({frozenset(e) for e in out.items()}) == 6
    with pytest.raises(ContractViolation):
        orient_unicyclic(Graph(3, [(0, 1), (1, 2)]))


def test_cds_to_cists_on_k4_pairs():
    fam = cds_to_cists(complete_graph(4), [{0, 1}, {2, 3}])
    assert len(fam) == 2
    assert is_cist_family(fam.graph, fam).ok
    assert fam.internal == (frozenset({0, 1}), frozenset({2, 3}))


def test_cds_to_cists_rejects_bad_family():
    with pytest.raises(ValidationError):
        cds_to_cists(complete_graph(2), [{0}, {1}])


def test_case1_matches_packing_size():
    g = complete_graph(6)
    fam = line_cists_case1(g, (), 3)
    assert len(fam) == 3
    assert is_cist_family(fam.graph, fam).ok
    with pytest.raises(ContractViolation):
        line_cists_case1(g, (0, 1))


def test_case1_with_independent_s():
    g = h_ell_graph(2, 0)
    fam = line_cists_case1(g, (8,), 4)
    assert is_cist_family(fam.graph, fam).ok


@pytest.mark.parametrize("k,ell", [(2, 0), (2, 1), (3, 1)])
def test_line_cists_h_ell(k, ell):
    g = h_ell_graph(k, ell)
    fam = line_cists(g, 2)
    assert len(fam) == 2 * k
    assert is_cist_family(fam.graph, fam).ok
    assert fam.line.base == g


def test_case2_on_h1():
    fam = line_cists_case2(h_ell_graph(2, 1), (8, 9))
    assert len(fam) == 4 and is_cist_family(fam.graph, fam).ok
    with pytest.raises(ContractViolation):
        line_cists_case2(h_ell_graph(2, 1), (8,))


def test_line_cists_random_round_trip():
    for g in random_corpus(40, 4, 9, seed=101, p_range=(0.3, 0.9)):
        if g.m < 2:
            continue
        fam = line_cists(g)
        assert len(fam) == tau_prime(g).value
        report = is_cist_family(fam.graph, fam)
        assert report.ok, report.summary()
        if len(fam) and fam.graph.n >= 2:
            assert len(fam) <= cist_upper_bounds(fam.graph).best


def test_line_cists_needs_two_edges():
    with pytest.raises(ContractViolation):
        line_cists(Graph(2, [(0, 1)]))


def test_star_pairs():
    fam = cists_for_star(star_graph(5), 2)
    assert is_cist_family(fam.graph, fam).ok
    with pytest.raises(Infeasible):
        cists_for_star(star_graph(5), 3)


def test_petersen_line_graph_gets_one_tree():
    fam = line_cists(petersen_graph())
    assert len(fam) == 1 and is_cist_family(fam.graph, fam).ok


def test_internal_vertices():
    assert internal_vertices(4, [(0, 1), (1, 2), (2, 3)]) == {1, 2}


def test_cds_family_json_line_kind():
    lg = line_graph(cycle_graph(4))
    doc = CdsFamily.of(lg.line, [{0, 1}]).to_json(lg)
    assert doc["kind"] == "line"
    assert doc["sets"] == [[[0, 1], [0, 3]]]
