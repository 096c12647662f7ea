import random

import pytest

from majoritycc import (
    FamilySpec,
    Graph,
    classes_connected,
    compute_fgh,
    exact_mc,
    extract_cut,
    gen_named,
    root_value,
    tree_mc,
    verify_majority,
)

from bruteforce import random_tree


def test_known_tree_values():
    assert tree_mc(gen_named(FamilySpec("path", (8,)))).value == 4
    assert tree_mc(gen_named(FamilySpec("path", (9,)))).value == 4
    assert tree_mc(gen_named(FamilySpec("subdivided_star", (5,)))).value == 3
    assert tree_mc(gen_named(FamilySpec("star", (7,)))).value == 1
    assert tree_mc(Graph(1, [])).value == 1
    assert tree_mc(Graph(2, [(0, 1)])).value == 1


def test_rejects_cycles():
    with pytest.raises(ValueError, match="cycle"):
        tree_mc(gen_named(FamilySpec("cycle", (5,))))
    with pytest.raises(ValueError, match="cycle"):
        tree_mc(Graph(4, [(0, 1), (1, 2), (2, 0)]))


def test_fgh_spider():
    # center 0 with three legs of length 2: every leg middle has f=g=1, h=1
    g = Graph(7, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)])
    state = compute_fgh(g, 0)
    for mid in (1, 3, 5):
        assert state.f[mid] == 1
        assert state.g[mid] == 1
        assert state.h[mid] == 1
    assert root_value(state, g) == 2


def test_fgh_caterpillar():
    # vertex 1 has three children, two of them non-leaf with f=g=1:
    # c = 2 so f(1)=3, g(1)=2, h(1)=0
    g = Graph(8, [(0, 1), (0, 2), (1, 3), (1, 4), (1, 5), (3, 6), (4, 7)])
    state = compute_fgh(g, 0)
    assert state.f[1] == 3
    assert state.g[1] == 2
    assert state.h[1] == 0


def test_fgh_invariants_random():
    rng = random.Random(606)
    for _ in range(60):
        n = rng.randint(3, 14)
        t = Graph(n, random_tree(rng, n))
        roots = [v for v in range(n) if t.degree(v) >= 2]
        state = compute_fgh(t, roots[0])
        for x in range(n):
            if x == state.root or not state.children[x]:
                continue
            assert state.h[x] in (0, 1)
            assert state.g[x] <= state.f[x] <= state.g[x] + 1


def test_root_choice_does_not_change_value():
    rng = random.Random(607)
    for _ in range(40):
        n = rng.randint(3, 12)
        t = Graph(n, random_tree(rng, n))
        values = set()
        for root in range(n):
            if t.degree(root) >= 2:
                values.add(root_value(compute_fgh(t, root), t))
        assert len(values) == 1


def test_root_must_be_internal():
    t = Graph(3, [(0, 1), (1, 2)])
    with pytest.raises(ValueError):
        compute_fgh(t, 0)


def test_extracted_cut_properties():
    rng = random.Random(608)
    for _ in range(60):
        n = rng.randint(3, 14)
        t = Graph(n, random_tree(rng, n))
        root = min(v for v in range(n) if t.degree(v) >= 2)
        state = compute_fgh(t, root)
        s = root_value(state, t)
        cut = extract_cut(state, t)
        for u, v in cut.edges:
            assert t.degree(u) > 1 and t.degree(v) > 1  # no leaf edges
        for v in range(n):
            assert 2 * cut.cut_degree(v) <= t.degree(v)
        res = tree_mc(t)
        assert res.value == s


def test_p8_cut():
    res = tree_mc(gen_named(FamilySpec("path", (8,))))
    assert res.cut.edges == frozenset({(1, 2), (3, 4), (5, 6)})
    assert res.witness.assignment == (0, 0, 1, 1, 2, 2, 3, 3)


def test_p2_cut_empty():
    res = tree_mc(Graph(2, [(0, 1)]))
    assert res.cut.edges == frozenset()
    assert res.value == 1


def test_subdivided_star_cut():
    # two center edges removed leaves 3 components
    res = tree_mc(gen_named(FamilySpec("subdivided_star", (5,))))
    assert res.value == 3
    assert len(res.cut.edges) == 2
    assert all(0 in e for e in res.cut.edges)


def test_tree_matches_exact_random():
    rng = random.Random(609)
    for _ in range(120):
        n = rng.randint(1, 12)
        t = Graph(n, random_tree(rng, n))
        res = tree_mc(t)
        assert res.value == exact_mc(t).value
        assert verify_majority(t, res.witness).valid
        assert res.witness.k == res.value
        assert all(classes_connected(t, res.witness))


def test_forest_sums_components():
    rng = random.Random(610)
    for _ in range(30):
        sizes = [rng.randint(1, 6) for _ in range(rng.randint(2, 4))]
        edges = []
        base = 0
        parts = []
        for s in sizes:
            sub_edges = random_tree(rng, s)
            edges += [(u + base, v + base) for u, v in sub_edges]
            parts.append(Graph(s, sub_edges))
            base += s
        forest = Graph(base, edges)
        res = tree_mc(forest)
        assert res.value == sum(tree_mc(p).value for p in parts)
        assert verify_majority(forest, res.witness).valid


def test_work_is_linear():
    rng = random.Random(611)
    for n in [10, 50, 200, 1000]:
        ops = []
        for _ in range(5):
            t = Graph(n, random_tree(rng, n))
            ops.append(tree_mc(t).stats.nodes)
        assert max(ops) <= 10 * n
