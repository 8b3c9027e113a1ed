import pytest

from bettisplit.graph import Graph
from bettisplit.oracle import GF2, QQ, calibrate

EXAMPLE_EDGES = [("x1", "x2"), ("x2", "x3"), ("x2", "x4"), ("x4", "x5"), ("x4", "x6")]
EXAMPLE_TABLE = {(0, 2): 5, (1, 3): 6, (2, 4): 2}
EXAMPLE_MINUS_TABLE = {(0, 2): 4, (1, 3): 2, (1, 4): 4, (2, 5): 4, (3, 6): 1}


@pytest.fixture(scope="session", autouse=True)
def calibrated_oracle():
    # the oracle's index convention is checked once before any test may use it
    calibrate(QQ)
    calibrate(GF2)


@pytest.fixture
def example():
    return Graph.from_edges(EXAMPLE_EDGES)


@pytest.fixture
def example_minus():
    return Graph.from_edges([e for e in EXAMPLE_EDGES if e != ("x2", "x4")],
                            vertices=[f"x{k}" for k in range(1, 7)])


def graph(edges: str, isolated: str = "") -> Graph:
    """``graph("ab bc cd")`` builds a graph from two-letter edges."""
    return Graph.from_edges([tuple(e) for e in edges.split()], vertices=list(isolated))
