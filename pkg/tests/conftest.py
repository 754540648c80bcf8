"""
Shared fixtures: named graphs with known invariants and default configurations.
"""

import pytest

from cliquebound.config import Config
from cliquebound.graph import from_edge_list
from cliquebound.graph6 import encode_graph6
from cliquebound.generators import (
    complete_graph, complete_multipartite, cycle_graph, empty_graph, kneser_graph,
)


@pytest.fixture
def config():
    return Config()


@pytest.fixture
def chi_config():
    return Config({"solver": {"with_chi": True}})


@pytest.fixture
def k5():
    return complete_graph(5)


@pytest.fixture
def petersen():
    return kneser_graph(5, 2)


@pytest.fixture
def c7():
    return cycle_graph(7)


@pytest.fixture
def k33():
    return complete_multipartite([3, 3])


@pytest.fixture
def k222():
    return complete_multipartite([2, 2, 2])


@pytest.fixture
def edgeless3():
    return empty_graph(3)


@pytest.fixture
def isolated_triangle():
    """
    A triangle plus one isolated vertex.
    """
    return from_edge_list(4, [(0, 1), (1, 2), (0, 2)])


@pytest.fixture
def corpus(tmp_path, k5, petersen, c7):
    path = tmp_path / "named.g6"
    path.write_text("\n".join(encode_graph6(g) for g in (k5, petersen, c7)) + "\n")
    return str(path)
