import random

import pytest

from majoritycc import (
    FamilySpec,
    Graph,
    bound_cubic,
    bound_delta,
    bound_delta_Delta,
    bounds_report,
    exact_family,
    exact_mc,
    exact_power_cycle,
    exact_power_path,
    gen_named,
    has_closed_form,
    mc_value,
)

from bruteforce import random_graph


def test_delta_Delta_examples():
    assert bound_delta_Delta(gen_named(FamilySpec("cycle", (9,)))) == 4
    assert bound_delta_Delta(gen_named(FamilySpec("complete", (5,)))) == 1
    assert bound_delta_Delta(gen_named(FamilySpec("power_cycle", (12, 2)))) == 4


def test_delta_examples():
    assert bound_delta(gen_named(FamilySpec("diamond_chain", (3,)))) == 4
    assert bound_delta(gen_named(FamilySpec("power_cycle", (10, 2)))) == 3
    assert bound_delta(Graph(6, [])) == 6


def test_bounds_reject_empty():
    with pytest.raises(ValueError):
        bound_delta_Delta(Graph(0, []))
    with pytest.raises(ValueError):
        bound_delta(Graph(0, []))


def test_power_path_formula():
    assert exact_power_path(8, 3) == 2
    assert exact_power_path(5, 4) == 1
    for n in range(1, 15):
        assert exact_power_path(n, 1) == (1 if n <= 2 else n // 2)
    with pytest.raises(ValueError):
        exact_power_path(0, 1)


def test_power_cycle_formula():
    assert exact_power_cycle(10, 2) == 3
    assert exact_power_cycle(12, 3) == 3
    assert exact_power_cycle(5, 3) is None
    with pytest.raises(ValueError):
        exact_power_cycle(2, 1)


def test_family_formulas():
    assert exact_family(FamilySpec("complete_bipartite", (4, 4))) == 2
    assert exact_family(FamilySpec("sharp_lower_H", (3,))) == 7
    assert exact_family(FamilySpec("sharp_upper_F", (2,))) == 3
    assert exact_family(FamilySpec("windmill", (5,))) == 3
    assert exact_family(FamilySpec("diamond_chain", (4,))) == 4
    assert exact_family(FamilySpec("extremal_max", (10, 4))) == 4
    assert has_closed_form(FamilySpec("petersen", ()))
    assert not has_closed_form(FamilySpec("random_tree", (5, 1)))
    assert not has_closed_form(FamilySpec("power_cycle", (5, 3)))


def test_formulas_match_search(named_graphs):
    for spec, g in named_graphs:
        if not has_closed_form(spec) or g.n > 14:
            continue
        assert exact_family(spec) == exact_mc(g).value, spec.tag()


def test_bounds_dominate_search(named_graphs):
    for spec, g in named_graphs:
        if g.n < 1 or g.n > 12:
            continue
        value = exact_mc(g).value
        assert bound_delta_Delta(g) >= value, spec.tag()
        assert bound_delta(g) >= value, spec.tag()


def test_bounds_dominate_on_random_graphs():
    rng = random.Random(404)
    for _ in range(80):
        n = rng.randint(1, 8)
        g = Graph(n, random_graph(rng, n))
        value = exact_mc(g).value
        assert bound_delta_Delta(g) >= value
        assert bound_delta(g) >= value


def test_cubic_bound():
    value, tight = bound_cubic(gen_named(FamilySpec("diamond_chain", (3,))))
    assert (value, tight) == (3, True)
    value, tight = bound_cubic(gen_named(FamilySpec("complete", (4,))))
    assert (value, tight) == (1, False)  # K_4 is cubic but not K_4-free
    value, tight = bound_cubic(gen_named(FamilySpec("petersen", ())))
    assert (value, tight) == (3, False)  # contains claws
    with pytest.raises(ValueError):
        bound_cubic(gen_named(FamilySpec("path", (4,))))


def test_report_entries():
    g = gen_named(FamilySpec("petersen", ()))
    report = bounds_report(g, FamilySpec("petersen", ()))
    assert report.get("delta_Delta").value == 3
    assert report.get("delta").value == 3
    cubic = report.get("cubic")
    assert cubic.applicable and cubic.kind == "upper-bound"
    fam = report.get("family_formula")
    assert fam.applicable and fam.value == 2 and fam.kind == "exact"
    no_tag = bounds_report(g, None)
    assert not no_tag.get("family_formula").applicable


def test_report_exact_entries_match_search(named_graphs):
    for spec, g in named_graphs:
        if g.n > 12:
            continue
        value = exact_mc(g).value
        for entry in bounds_report(g, spec).entries:
            if not entry.applicable:
                continue
            if entry.kind == "exact":
                assert entry.value == value, spec.tag()
            else:
                assert entry.value >= value, spec.tag()


def test_power_path_witness_prefix_is_monochromatic():
    # in the optimal colorings found, the first k+1 path vertices share
    # one class whenever n >= 2k+2
    for n, k in [(8, 3), (9, 2), (10, 2), (12, 2), (12, 3), (14, 3), (6, 2)]:
        if n < 2 * k + 2:
            continue
        g = gen_named(FamilySpec("power_path", (n, k)))
        witness = exact_mc(g).witness
        assert len(set(witness.assignment[:k + 1])) == 1, (n, k)


def test_mc_value_dispatcher_consistency(named_graphs):
    for spec, g in named_graphs:
        if g.n > 12:
            continue
        assert mc_value(g) == exact_mc(g).value, spec.tag()
