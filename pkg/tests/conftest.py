import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from hamconn.multigraph import (
    Multigraph,
    complete_graph,
    cycle_graph,
    path_graph,
    star_graph,
)


@pytest.fixture
def k4():
    return complete_graph(4)


@pytest.fixture
def c5():
    return cycle_graph(5)


@pytest.fixture
def c7():
    return cycle_graph(7)


@pytest.fixture
def claw():
    return star_graph(3)


@pytest.fixture
def p4():
    return path_graph(4)


@pytest.fixture
def k4_with_pendants():
    """K4 plus one pendant edge at each vertex (essentially 3-edge-connected)."""
    return Multigraph(
        8,
        [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (0, 4), (1, 5), (2, 6), (3, 7)],
    )


@pytest.fixture
def triangle_with_pendant():
    """Triangle 0,1,2 plus the pendant edge (0, 3)."""
    return Multigraph(4, [(0, 1), (1, 2), (2, 0), (0, 3)])
