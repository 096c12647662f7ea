import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from majoritycc import FamilySpec, gen_named


NAMED_SMALL = [
    FamilySpec("path", (1,)),
    FamilySpec("path", (2,)),
    FamilySpec("path", (5,)),
    FamilySpec("path", (8,)),
    FamilySpec("cycle", (3,)),
    FamilySpec("cycle", (6,)),
    FamilySpec("cycle", (11,)),
    FamilySpec("complete", (2,)),
    FamilySpec("complete", (5,)),
    FamilySpec("complete_bipartite", (2, 2)),
    FamilySpec("complete_bipartite", (2, 3)),
    FamilySpec("complete_bipartite", (4, 4)),
    FamilySpec("complete_minus_edge", (2,)),
    FamilySpec("complete_minus_edge", (5,)),
    FamilySpec("star", (4,)),
    FamilySpec("star", (7,)),
    FamilySpec("subdivided_star", (3,)),
    FamilySpec("subdivided_star", (5,)),
    FamilySpec("wheel", (6,)),
    FamilySpec("windmill", (2,)),
    FamilySpec("windmill", (3,)),
    FamilySpec("petersen", ()),
    FamilySpec("power_path", (8, 3)),
    FamilySpec("power_path", (9, 2)),
    FamilySpec("power_cycle", (11, 2)),
    FamilySpec("diamond_chain", (3,)),
]


@pytest.fixture(scope="session")
def named_graphs():
    return [(spec, gen_named(spec)) for spec in NAMED_SMALL]
