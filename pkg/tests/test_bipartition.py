import pytest

from majoritycc import (
    FamilySpec,
    Graph,
    bipartition_4regular,
    bipartition_clique,
    bipartition_girth,
    gen_named,
    verify_majority,
)


def check_success(g, res):
    assert res.status == "success"
    assert res.coloring is not None
    assert res.coloring.k == 2
    assert verify_majority(g, res.coloring).valid
    trace = res.trace
    sizes = trace.boundary_sizes
    for i in range(1, len(sizes)):
        assert sizes[i] < sizes[i - 1]
    assert len(trace.moves) <= sizes[0]
    assert 0 < len(trace.final_side) < g.n


def test_clique_on_wide_power_cycle():
    g = gen_named(FamilySpec("power_cycle", (25, 2)))
    res = bipartition_clique(g)
    check_success(g, res)
    assert res.guaranteed


def test_clique_on_k5():
    g = gen_named(FamilySpec("complete", (5,)))
    res = bipartition_clique(g)
    assert res.status in ("exhausted", "precondition-unmet")
    assert not res.guaranteed
    assert res.coloring is None


def test_clique_zero_moves():
    # triangle with a pendant path per corner: seed triangle absorbs nothing
    g = Graph(9, [(0, 1), (1, 2), (0, 2),
                  (0, 3), (3, 4), (1, 5), (5, 6), (2, 7), (7, 8)])
    res = bipartition_clique(g)
    check_success(g, res)
    assert len(res.trace.moves) == 0
    assert sorted(res.trace.seed) == [0, 1, 2]


def test_girth_on_c20_exhausts():
    g = gen_named(FamilySpec("cycle", (20,)))
    res = bipartition_girth(g)
    assert res.status == "exhausted"
    assert not res.guaranteed  # n = 20 is not > 3 * 20


def test_girth_on_petersen_opportunistic():
    g = gen_named(FamilySpec("petersen", ()))
    res = bipartition_girth(g)
    check_success(g, res)
    assert not res.guaranteed  # 10 is not > 3 * 5


def test_girth_guaranteed_on_circulant():
    g = gen_named(FamilySpec("power_cycle", (21, 2)))
    res = bipartition_girth(g)
    check_success(g, res)
    assert res.guaranteed  # max degree 4, 21 > 3 * 3


def test_girth_needs_a_cycle():
    g = gen_named(FamilySpec("path", (9,)))
    res = bipartition_girth(g)
    assert res.status == "precondition-unmet"


def test_4regular_success():
    g = gen_named(FamilySpec("power_cycle", (11, 2)))
    res = bipartition_4regular(g)
    check_success(g, res)
    assert res.guaranteed  # 11 >= 2 * 3 + 1


def test_4regular_rejects_non_regular():
    with pytest.raises(ValueError):
        bipartition_4regular(gen_named(FamilySpec("petersen", ())))


def test_4regular_small_orders_unmet():
    k5 = gen_named(FamilySpec("complete", (5,)))
    res = bipartition_4regular(k5)
    assert res.status == "precondition-unmet"
    k44 = gen_named(FamilySpec("complete_bipartite", (4, 4)))
    res = bipartition_4regular(k44)
    assert res.status == "precondition-unmet"  # n = 8 < 2 * 4 + 1


def test_guaranteed_runs_always_succeed():
    for n in range(10, 22):
        g = gen_named(FamilySpec("power_cycle", (n, 2)))
        for run in (bipartition_clique, bipartition_girth):
            res = run(g)
            assert res.guaranteed, (run.__name__, n)
            check_success(g, res)
        if n >= 7:
            res = bipartition_4regular(g)
            assert res.guaranteed
            check_success(g, res)


def test_deterministic_traces():
    g = gen_named(FamilySpec("power_cycle", (14, 2)))
    a = bipartition_clique(g)
    b = bipartition_clique(g)
    assert a.trace == b.trace
    assert a.coloring == b.coloring
