"""Acceptance criteria AC1-AC9; a PASS/FAIL line per criterion is printed in the summary."""
import random
import time

import pytest

from linecist.complete import induced_paths_lkn, lkn_cists, lkn_fault_survivors
from linecist.connectivity import is_star, restricted_edge_connectivity_22, vertex_connectivity
from linecist.construct import CdsFamily, cds_to_cists, line_cists
from linecist.graph import complete_graph, h_ell_graph, line_graph, petersen_graph, random_connected_graph
from linecist.packing import tau, tau_bruteforce, tau_prime
from linecist.theorems import check_theorems
from linecist.verify import (
    cds_family_exists_bruteforce,
    cist_exists_bruteforce,
    cist_upper_bounds,
    connected_domination_number,
    is_cist_family,
)

from conftest import record

H_ELL = [(2, 0), (2, 1), (3, 1)]


def timed(fn):
    start = time.perf_counter()
    value = fn()
    return value, time.perf_counter() - start


def test_ac1_lkn_family():
    def run():
        bad = []
        for n in range(4, 15):
            fam = lkn_cists(n)
            if len(fam) != (n + 1) // 2 or not is_cist_family(fam.graph, fam).ok:
                bad.append(n)
        return bad

    bad, secs = timed(run)
    ok = not bad and secs < 10
    record("AC1", ok, f"n=4..14 counts and verification, failures {bad}, {secs:.2f}s")
    assert ok


def _gamma_bound(n):
    lg = line_graph(complete_graph(n)).line
    gc = connected_domination_number(lg)
    return gc, lg.n // gc


def test_ac2_odd_n_meet_domination_bound():
    def run():
        rows = []
        for n in (5, 7, 9):
            gc, bound = _gamma_bound(n)
            rows.append((n, gc, bound, len(lkn_cists(n))))
        return rows

    rows, secs = timed(run)
    ok = all(gc == n - 2 and bound == count == (n + 1) // 2 for n, gc, bound, count in rows) and secs < 120
    record("AC2", ok, f"odd n (n, gamma_c, bound, count) {rows}, {secs:.2f}s")
    assert ok


def test_ac2_even_n_match_tau():
    rows = [(n, len(lkn_cists(n)), tau(complete_graph(n))) for n in (6, 8, 10)]
    ok = all(c == t == n // 2 for n, c, t in rows)
    record("AC2", ok, f"even n (n, count, tau) {rows}")
    assert ok


def test_ac2_n4_count_meets_min_upper_bound():
    lg = line_graph(complete_graph(4)).line
    b = cist_upper_bounds(lg)
    ok = len(lkn_cists(4)) == b.best == 2
    record("AC2", ok, f"n=4 count 2 equals min bound {b.to_json()}")
    assert ok


@pytest.mark.xfail(strict=True, reason="floor(6 / gamma_c(L(K4)) = 2) = 3 exceeds the 2 CISTs; n=4 is tight for the density bound instead")
def test_ac2_n4_literal_domination_bound():
    gc, bound = _gamma_bound(4)
    ok = bound == (4 + 1) // 2
    record("AC2", ok, f"n=4 literal floor(|E(K4)|/gamma_c) = floor(6/{gc}) = {bound} vs count 2")
    assert ok


def test_ac3_fault_tolerance():
    def run():
        failures, counts = [], {}
        for n in (7, 9):
            for e in complete_graph(n).edges:
                fam = lkn_fault_survivors(n, [e])
                if len(fam) != (n + 1) // 2 or not is_cist_family(fam.graph, fam).ok:
                    failures.append((n, e))
            counts[n] = n * (n - 1) // 2
        for n in (6, 8):
            paths = list(induced_paths_lkn(n, n // 2))
            counts[n] = len(paths)
            for d in paths:
                fam = lkn_fault_survivors(n, d)
                if len(fam) != n // 2 or not is_cist_family(fam.graph, fam).ok:
                    failures.append((n, d))
        return failures, counts

    (failures, counts), secs = timed(run)
    ok = not failures and secs < 300
    record("AC3", ok, f"deletion sets per n {counts}, failures {len(failures)}, {secs:.2f}s")
    assert ok


def test_ac4_tau_complete():
    rows = [(n, tau(complete_graph(n))) for n in range(2, 13)]
    brute = [(n, tau_bruteforce(complete_graph(n))) for n in range(2, 8)]
    ok = all(t == n // 2 for n, t in rows) and all(t == n // 2 for n, t in brute)
    record("AC4", ok, f"tau(K_n) n=2..12 {[t for _, t in rows]}, brute force n<=7 agrees")
    assert ok


def test_ac5_tau_prime_separation():
    def run():
        rows = []
        for k, ell in H_ELL:
            g = h_ell_graph(k, ell)
            res = tau_prime(g, 2)
            fam = line_cists(g, 2)
            rows.append((k, ell, res.value, tau(g), len(fam), is_cist_family(fam.graph, fam).ok,
                         res.cap_binding, list(res.witness.s)))
        return rows

    rows, secs = timed(run)
    ok = secs < 120 and all(
        tp >= 2 * k and t <= ell + 1 and count == 2 * k and verified and binding is False
        for k, ell, tp, t, count, verified, binding, _ in rows
    )
    record("AC5", ok, f"(k, ell, tau', tau, CISTs, ok, capBinding, S) {rows}, {secs:.2f}s")
    assert ok


def test_ac6_negative_instance():
    def run():
        lp = line_graph(petersen_graph()).line
        lk4 = line_graph(complete_graph(4)).line
        return (
            cist_exists_bruteforce(lp, 2).exists,
            cist_exists_bruteforce(lk4, 2).exists,
            cist_exists_bruteforce(lk4, 3).exists,
        )

    (pet, k4_2, k4_3), secs = timed(run)
    ok = not pet and k4_2 and not k4_3 and secs < 180
    record("AC6", ok, f"L(Petersen) k=2 {pet}, L(K4) k=2 {k4_2}, k=3 {k4_3}, {secs:.2f}s")
    assert ok


def test_ac7_connectivity_cross_check():
    def run():
        bad = []
        for n in range(4, 9):
            kl = vertex_connectivity(line_graph(complete_graph(n)).line)
            if not kl == restricted_edge_connectivity_22(complete_graph(n)) == 2 * n - 4:
                bad.append(("K", n))
        rng = random.Random(7007)
        checked = 0
        while checked < 200:
            g = random_connected_graph(rng.randint(5, 10), rng.uniform(0.2, 0.8), rng)
            if is_star(g):
                continue
            checked += 1
            if vertex_connectivity(line_graph(g).line) != restricted_edge_connectivity_22(g):
                bad.append(g.edges)
        return bad, checked

    (bad, checked), secs = timed(run)
    ok = not bad and secs < 120
    record("AC7", ok, f"K4..K8 plus {checked} random graphs, mismatches {len(bad)}, {secs:.2f}s")
    assert ok


def test_ac8_theorem_soundness():
    def run():
        rng = random.Random(8008)
        corpus = [complete_graph(n) for n in range(4, 11)]
        corpus += [h_ell_graph(k, ell) for k, ell in H_ELL]
        corpus += [random_connected_graph(rng.randint(4, 10), rng.uniform(0.3, 0.9), rng) for _ in range(100)]
        alarms, satisfied = [], 0
        for g in corpus:
            for k in (2, 3):
                rep = check_theorems(g, k)
                satisfied += sum(1 for c in rep.checks if c.hypothesis)
                alarms += [(g.edges, k, c.name, c.note) for c in rep.alarms]
        return alarms, satisfied, len(corpus)

    (alarms, satisfied, size), secs = timed(run)
    ok = not alarms and secs < 600
    record("AC8", ok, f"{size} graphs x k in {{2,3}}, {satisfied} satisfied hypotheses, "
                      f"{len(alarms)} alarms, {secs:.2f}s")
    assert ok, alarms[:3]


def test_ac9_characterization_biconditional():
    def run():
        rng = random.Random(9009)
        disagree, built_bad, positives = [], [], 0
        for _ in range(500):
            g = random_connected_graph(rng.randint(2, 7), rng.uniform(0.2, 1.0), rng)
            part = cist_exists_bruteforce(g, 2)
            cds = cds_family_exists_bruteforce(g, 2)
            if part.exists != (cds is not None):
                disagree.append(g.edges)
            if part.exists:
                positives += 1
                fam = cds_to_cists(g, CdsFamily.of(g, part.witness))
                if not is_cist_family(g, fam).ok:
                    built_bad.append(g.edges)
        return disagree, built_bad, positives

    (disagree, built_bad, positives), secs = timed(run)
    ok = not disagree and not built_bad and secs < 600
    record("AC9", ok, f"500 graphs, {positives} with 2 CISTs, disagreements {len(disagree)}, "
                      f"bad constructions {len(built_bad)}, {secs:.2f}s")
    assert ok
