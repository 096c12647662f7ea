from math import comb

import pytest

from majoritycc import (
    FamilySpec,
    Graph,
    check_chi_plus_mc,
    chi_mc_pair,
    chromatic_number,
    exact_mc,
    gen_named,
    max_edges,
    min_edges,
    mc_value,
    witness_max,
    witness_min,
)
from majoritycc.extremal import exhaustive_check


def test_max_edges_values():
    assert max_edges(8, 2) == 24
    assert max_edges(7, 2) == 15
    assert max_edges(9, 4) == 15
    assert max_edges(10, 4) == 24
    for n in range(1, 10):
        assert max_edges(n, n) == 0
        assert max_edges(n, 1) == comb(n, 2)
    with pytest.raises(ValueError):
        max_edges(3, 4)
    with pytest.raises(ValueError):
        max_edges(3, 0)


def test_min_edges_values():
    assert min_edges(7, 3) == 4
    assert min_edges(5, 1) == 4
    for n in range(1, 10):
        assert min_edges(n, n) == 0
    with pytest.raises(ValueError):
        min_edges(2, 3)


def test_witness_max_structures():
    w = witness_max(7, 2)
    assert w.graph.m == 15
    assert w.graph.degree(6) == 0  # one isolated vertex
    w = witness_max(8, 2)
    assert w.graph.m == 24
    assert all(w.graph.degree(v) == 6 for v in range(8))  # K_8 minus matching
    w = witness_max(10, 4)
    assert w.graph.m == 24 == max_edges(10, 4)


def test_witness_min_structures():
    w = witness_min(7, 3)
    assert w.graph.m == 4
    assert w.graph.degree(0) == 4  # star center
    assert witness_min(5, 5).graph.m == 0
    w = witness_min(6, 2)
    assert w.graph.m == 4 and w.graph.degree(5) == 0


def test_witnesses_attain_their_mc():
    for n in range(2, 11):
        for k in range(1, n + 1):
            wmax = witness_max(n, k)
            assert exact_mc(wmax.graph).value == k, ("max", n, k)
            wmin = witness_min(n, k)
            assert exact_mc(wmin.graph).value == k, ("min", n, k)


def test_exhaustive_sweep_matches_formulas():
    for n in range(2, 7):
        for row in exhaustive_check(n):
            assert row.max_found == row.max_formula, (n, row.k)
            assert row.min_found == row.min_formula, (n, row.k)
            assert row.verified


def test_chi_mc_pair_examples():
    g = chi_mc_pair(3, 4)
    assert g.n == 12
    assert chromatic_number(g) == 3
    assert mc_value(g) == 4
    assert chi_mc_pair(1, 5).m == 0 and chi_mc_pair(1, 5).n == 5
    k4 = chi_mc_pair(4, 1)
    assert k4.n == 4 and k4.m == 6


def test_chi_mc_pair_grid():
    for k1 in range(1, 4):
        for k2 in range(1, 4):
            if k1 * k2 > 12:
                continue
            g = chi_mc_pair(k1, k2)
            assert chromatic_number(g) == k1, (k1, k2)
            assert mc_value(g) == k2, (k1, k2)


def test_chi_plus_mc_examples():
    for n in range(1, 8):
        res = check_chi_plus_mc(gen_named(FamilySpec("complete", (n,))))
        assert res.holds and res.total == n + 1
        res = check_chi_plus_mc(Graph(n, []))
        assert res.holds and res.total == n + 1
    res = check_chi_plus_mc(gen_named(FamilySpec("petersen", ())))
    assert res.holds
    assert (res.chi, res.mc, res.total) == (3, 2, 5)
