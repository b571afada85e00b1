import itertools

import pytest

from linecist.construct import CdsFamily, CistFamily, cds_to_cists
from linecist.complete import lkn_cists, lkn_family
from linecist.errors import ContractViolation
from linecist.graph import Graph, complete_graph, cycle_graph, is_spanning_tree, line_graph, star_graph
from linecist.verify import (
    cds_family_exists_bruteforce,
    cist_exists_bruteforce,
    cist_upper_bounds,
    connected_domination_number,
    connected_domination_number_naive,
    is_cist_family,
    is_valid_cds_family,
)

from conftest import random_corpus


def test_lkn5_ok():
    fam = lkn_cists(5)
    assert is_cist_family(fam.graph, fam).ok


def test_identical_trees_share_edges():
    k4 = complete_graph(4)
    t = [(0, 1), (1, 2), (2, 3)]
    fam = CistFamily.from_trees(k4, [t, t])
    assert "edge-disjoint" in is_cist_family(k4, fam).clauses()


def _disjoint_pair_sharing_internal(g):
    trees = [frozenset(c) for c in itertools.combinations(g.edges, g.n - 1) if is_spanning_tree(g.n, c)]
    for a, b in itertools.combinations(trees, 2):
        fam = CistFamily.from_trees(g, [a, b])
        clauses = is_cist_family(g, fam).clauses()
        if "edge-disjoint" not in clauses and "internal-disjoint" in clauses:
            return fam
    return None


def test_edge_disjoint_trees_sharing_internal_vertex():
    # in K4 two disjoint trees use all 6 edges, so no vertex has degree >= 2 in both
    assert _disjoint_pair_sharing_internal(complete_graph(4)) is None
    fam = _disjoint_pair_sharing_internal(complete_graph(5))
    assert fam is not None
    assert fam.internal[0] & fam.internal[1]


def test_cist_report_catches_non_tree_and_bad_internal():
    k4 = complete_graph(4)
    fam = CistFamily(k4, (frozenset([(0, 1), (1, 2), (0, 2)]),), (frozenset({0}),))
    clauses = is_cist_family(k4, fam).clauses()
    assert {"spanning", "acyclic", "internal-consistency"} <= clauses
    bad = CistFamily.from_trees(cycle_graph(4), [[(0, 2), (0, 1), (1, 3)]])
    assert "edge-not-in-graph" in is_cist_family(cycle_graph(4), bad).clauses()


def test_k4_table_is_valid_and_unicyclic():
    fam = lkn_family(4)
    lg = fam.line()
    cds = fam.cds_family(lg)
    assert is_valid_cds_family(lg.line, cds).ok
    from linecist.graph import bipartite_induced

    bip, _ = bipartite_induced(lg.line, cds.sets[0], cds.sets[1])
    assert bip.is_connected() and bip.m == bip.n


def test_cds_failures():
    assert "cycle" in is_valid_cds_family(complete_graph(2), [{0}, {1}]).clauses()
    report = is_valid_cds_family(cycle_graph(6), [{0, 1}])
    assert "dominating" in report.clauses()
    assert report.failures[0].where == (0, 3)
    assert "disjoint" in is_valid_cds_family(complete_graph(4), [{0, 1}, {1, 2}]).clauses()
    assert "connected" in is_valid_cds_family(cycle_graph(5), [{0, 2}]).clauses()


@pytest.mark.parametrize("n,value", [(4, 2), (5, 3), (6, 4)])
def test_gamma_c_line_complete(n, value):
    assert connected_domination_number(line_graph(complete_graph(n)).line) == value


def test_gamma_c_star_and_errors():
    assert connected_domination_number(star_graph(5)) == 1
    with pytest.raises(ContractViolation):
        connected_domination_number(Graph(4, [(0, 1), (2, 3)]))


def test_gamma_c_against_naive():
    for g in random_corpus(60, 1, 12, seed=77, p_range=(0.15, 0.7)):
        assert connected_domination_number(g) == connected_domination_number_naive(g)


def test_upper_bounds():
    b = cist_upper_bounds(line_graph(complete_graph(7)).line)
    assert b.domination == 4
    b4 = cist_upper_bounds(line_graph(complete_graph(4)).line)
    assert b4.degree == 4 and b4.best == 2
    assert cist_upper_bounds(Graph(5, [(0, 1), (1, 2), (1, 3), (3, 4)])).density == 1


def test_bruteforce_oracle_examples():
    lk4 = line_graph(complete_graph(4)).line
    assert cist_exists_bruteforce(lk4, 2).exists
    assert not cist_exists_bruteforce(lk4, 3).exists
    assert not cist_exists_bruteforce(cycle_graph(4), 2).exists
    with pytest.raises(ContractViolation):
        cist_exists_bruteforce(complete_graph(17), 2)


def test_bruteforce_witness_builds_trees():
    res = cist_exists_bruteforce(complete_graph(6), 3)
    assert res.exists
    fam = cds_to_cists(complete_graph(6), res.witness)
    assert is_cist_family(fam.graph, fam).ok


def test_partition_and_cds_search_agree_on_small_graphs():
    for g in random_corpus(40, 3, 8, seed=5, p_range=(0.3, 0.9)):
        part = cist_exists_bruteforce(g, 2).exists
        cds = cds_family_exists_bruteforce(g, 2)
        assert part == (cds is not None)
        if cds is not None:
            fam = cds_to_cists(g, CdsFamily.of(g, cds))
            assert is_cist_family(g, fam).ok
