import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from raag.graph import (Graph, complete_graph, cycle_graph, empty_graph,
                        path_graph)


def random5_graph() -> Graph:
    # the fixed "random" five-vertex suite graph: a triangle with two pendants
    return Graph(["a", "b", "c", "d", "e"],
                 [("a", "b"), ("a", "c"), ("b", "c"), ("b", "d"), ("c", "e")])


SUITE = {
    "K3": complete_graph(3),
    "E3": empty_graph(3),
    "P3": path_graph(3),
    "C4": cycle_graph(4),
    "C5": cycle_graph(5),
    "R5": random5_graph(),
}


@pytest.fixture(params=list(SUITE), ids=list(SUITE))
def suite_graph(request):
    return SUITE[request.param]


def small_suite():
    """The suite members cheap enough for exhaustive BFS work."""
    return {k: g for k, g in SUITE.items() if len(g.vertices) <= 4}
