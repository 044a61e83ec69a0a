import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from domblocker import cycle_graph, path_graph


@pytest.fixture(scope="session")
def small_connected_corpus():
    """All connected graphs on up to 6 vertices, one per isomorphism class."""
    from domblocker.smallgraphs import connected_graphs_upto

    return connected_graphs_upto(6)


@pytest.fixture
def c4():
    return cycle_graph(4)


@pytest.fixture
def c6():
    return cycle_graph(6)


@pytest.fixture
def c9():
    return cycle_graph(9)


@pytest.fixture
def p4():
    return path_graph(4)
