"""Degree-based upper bounds and closed-form exact values.

Every quantity here is computed in exact integer arithmetic; rational
bounds are floored once, at the reporting boundary.  `bounds_report`
bundles all applicable entries for one graph into a BoundsReport, marking
each as an upper bound or an exact value with an applicability reason.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .generators import FAMILY_PARAMS, FamilySpec
from .graph import Graph


def bound_delta_Delta(g: Graph) -> int:
    """Upper bound 1 + (n - ceil(D/2) - 1) // (ceil(d/2) + 1) from the
    minimum degree d and maximum degree D."""
    if g.n < 1:
        raise ValueError("bound needs at least one vertex")
    degs = g.degrees()
    small = (min(degs) + 1) // 2 + 1
    big = (max(degs) + 1) // 2
    return 1 + (g.n - big - 1) // small


def bound_delta(g: Graph) -> int:
    """Upper bound n // (ceil(d/2) + 1) from the minimum degree d."""
    if g.n < 1:
        raise ValueError("bound needs at least one vertex")
    small = (min(g.degrees()) + 1) // 2 + 1
    return g.n // small


def exact_power_path(n: int, k: int) -> int:
    """mc of the k-th power of a path: 1 when the power is complete
    (n <= k+1), n // (k+1) otherwise."""
    if n < 1 or k < 1:
        raise ValueError("need n >= 1 and k >= 1")
    if n <= k + 1:
        return 1
    return n // (k + 1)


def exact_power_cycle(n: int, k: int) -> int | None:
    """mc of the k-th power of a cycle, n // (k+1), valid for n >= 2k+1.

    Returns None outside that range (the formula does not extend; use the
    exact solver instead).
    """
    if n < 3 or k < 1:
        raise ValueError("need n >= 3 and k >= 1")
    if n < 2 * k + 1:
        return None
    return n // (k + 1)


def _family_value(spec: FamilySpec) -> int:
    fam = spec.family
    p = dict(zip(FAMILY_PARAMS[fam], spec.params))
    if fam == "complete":
        return 1
    if fam == "path":
        return 1 if p["n"] <= 2 else p["n"] // 2
    if fam == "cycle":
        return p["n"] // 2
    if fam == "star":
        return 1
    if fam == "subdivided_star":
        return p["n"] // 2 + 1
    if fam == "wheel":
        return 1
    if fam == "complete_bipartite":
        return 2 if p["m"] % 2 == 0 and p["n"] % 2 == 0 else 1
    if fam == "windmill":
        return p["m"] // 2 + 1
    if fam == "complete_minus_edge":
        return 2 if p["n"] == 2 else 1
    if fam == "petersen":
        return 2
    if fam == "power_path":
        return exact_power_path(p["n"], p["k"])
    if fam == "power_cycle":
        value = exact_power_cycle(p["n"], p["k"])
        if value is None:
            raise ValueError(
                "power_cycle formula needs n >= 2k+1, got n=%d k=%d"
                % (p["n"], p["k"]))
        return value
    if fam == "sharp_lower_H":
        return 2 * p["n"] + 1
    if fam == "sharp_upper_F":
        return 2 * p["k"] - 1
    if fam == "diamond_chain":
        return p["d"]
    if fam == "extremal_max":
        return p["k"]
    if fam == "extremal_min":
        return p["k"]
    raise ValueError("no closed form for family %r" % fam)


def exact_family(spec: FamilySpec) -> int:
    """Closed-form mc for a recognized family instance."""
    return _family_value(spec)


def has_closed_form(spec: FamilySpec) -> bool:
    try:
        _family_value(spec)
    except ValueError:
        return False
    return True


def bound_cubic(g: Graph) -> tuple[int, bool]:
    """For a cubic graph: the bound (n - d) // 3 where d counts induced
    diamonds (K_4 minus an edge), plus a flag that is True when the bound
    is known exact (graph is claw-free and K_4-free)."""
    if g.n < 1 or any(g.degree(v) != 3 for v in range(g.n)):
        raise ValueError("graph is not cubic")
    diamonds = 0
    has_claw = False
    has_k4 = False
    for quad in combinations(range(g.n), 4):
        cnt = 0
        deg_in = [0, 0, 0, 0]
        for i, j in combinations(range(4), 2):
            if g.has_edge(quad[i], quad[j]):
                cnt += 1
                deg_in[i] += 1
                deg_in[j] += 1
        if cnt == 6:
            has_k4 = True
        elif cnt == 5:
            diamonds += 1
        elif cnt == 3 and max(deg_in) == 3:
            has_claw = True
    return (g.n - diamonds) // 3, not has_claw and not has_k4


@dataclass(frozen=True)
class BoundEntry:
    name: str
    applicable: bool
    reason: str
    value: int | None
    kind: str  # "upper-bound" | "exact"


@dataclass(frozen=True)
class BoundsReport:
    entries: tuple[BoundEntry, ...]

    def get(self, name: str) -> BoundEntry:
        for e in self.entries:
            if e.name == name:
                return e
        raise KeyError(name)


def bounds_report(g: Graph, spec: FamilySpec | None = None) -> BoundsReport:
    entries = []
    if g.n < 1:
        entries.append(BoundEntry("delta_Delta", False, "empty graph", None,
                                  "upper-bound"))
        entries.append(BoundEntry("delta", False, "empty graph", None,
                                  "upper-bound"))
    else:
        entries.append(BoundEntry("delta_Delta", True, "any graph",
                                  bound_delta_Delta(g), "upper-bound"))
        entries.append(BoundEntry("delta", True, "any graph",
                                  bound_delta(g), "upper-bound"))
    if g.n >= 1 and all(g.degree(v) == 3 for v in range(g.n)):
        value, tight = bound_cubic(g)
        entries.append(BoundEntry("cubic", True,
                                  "cubic graph" + (", claw- and K4-free" if tight else ""),
                                  value, "exact" if tight else "upper-bound"))
    else:
        entries.append(BoundEntry("cubic", False, "graph is not cubic", None,
                                  "upper-bound"))
    if spec is None:
        entries.append(BoundEntry("family_formula", False,
                                  "no family tag", None, "exact"))
    elif has_closed_form(spec):
        entries.append(BoundEntry("family_formula", True,
                                  "family " + spec.family,
                                  exact_family(spec), "exact"))
    else:
        entries.append(BoundEntry("family_formula", False,
                                  "no closed form for family " + spec.family,
                                  None, "exact"))
    return BoundsReport(tuple(entries))
