"""Method selection: one entry point that picks the cheapest exact route.

Forests go to the linear-time tree pass, graphs small enough for the
partition-table kernel go there, everything else hits branch-and-bound.
`solve_graph` additionally honors an explicit method request and family
tags (closed formulas), for the command line.
"""

from __future__ import annotations

from . import _kernels
from .bounds import exact_family, has_closed_form
from .exact import DEFAULT_BUDGET, SolveResult, SolveStats, exact_mc
from .generators import FamilySpec
from .graph import Graph
from .tree import tree_mc


def is_forest(g: Graph) -> bool:
    return g.m == g.n - len(g.components())


def mc_value(g: Graph, budget: int = DEFAULT_BUDGET, workers: int = 1) -> int:
    """Exact mc(g), or RuntimeError when the search budget runs out."""
    if g.n == 0:
        return 0
    if is_forest(g):
        return tree_mc(g).value
    if g.n <= _kernels.KERNEL_MAX_N:
        return _kernels.mc_value_small(g)
    res = exact_mc(g, budget=budget, workers=workers)
    if res.status != "optimal":
        raise RuntimeError(
            "budget exhausted: mc is in [%d, %d]" % (res.value, res.upper_bound))
    return res.value


def solve_graph(g: Graph, method: str = "auto", spec: FamilySpec | None = None,
                budget: int = DEFAULT_BUDGET, workers: int = 1):
    """Dispatch one solve; returns (method_used, result).

    The result is a SolveResult or TreeResult (same fields plus the
    deleted edge set).  method "formula" requires a recognized family
    spec and yields a value without a witness.
    """
    if method == "auto":
        if is_forest(g):
            method = "tree"
        elif spec is not None and has_closed_form(spec):
            method = "formula"
        else:
            method = "exact"
    if method == "tree":
        return "tree", tree_mc(g, workers=workers)
    if method == "formula":
        if spec is None:
            raise ValueError("formula method needs a family tag")
        value = exact_family(spec)
        return "formula", SolveResult(value, None, "optimal", value, SolveStats())
    if method == "exact":
        return "exact", exact_mc(g, budget=budget, workers=workers)
    raise ValueError("unknown method %r" % method)
