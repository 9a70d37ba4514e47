import networkx as nx
import numpy as np
import pytest

from gsacds import _pykernels, constructor, graph, neighborhood, objective
from gsacds.graph import Graph

try:
    from gsacds import _ckernels
except ImportError:
    _ckernels = None

KERNEL_USERS = (graph, objective, constructor, neighborhood)
BACKENDS = ["python"] + (["cython"] if _ckernels is not None else [])


@pytest.fixture(autouse=True)
def validate_moves(monkeypatch):
    monkeypatch.setattr(neighborhood, "VALIDATE", True)


@pytest.fixture(params=BACKENDS)
def backend(request, monkeypatch):
    """Run the test once per available kernel backend."""
    mod = _pykernels if request.param == "python" else _ckernels
    for m in KERNEL_USERS:
        monkeypatch.setattr(m, "kernels", mod)
    return request.param


def path4():
    return Graph.from_edges(4, [(0, 1, 1), (1, 2, 2), (2, 3, 3)])


def k3():
    return Graph.from_edges(3, [(0, 1, 1), (1, 2, 1), (0, 2, 1)])


def star(leaves=4, w=1):
    return Graph.from_edges(leaves + 1, [(0, i, w) for i in range(1, leaves + 1)])


def single():
    return Graph.from_edges(1, [])


@pytest.fixture
def p4():
    return path4()


@pytest.fixture
def tri():
    return k3()


def random_connected(rng: np.random.Generator, n: int, p: float | None = None, wmax: int = 100) -> Graph:
    """Connected G(n, p) with integer weights, drawn with networkx (independent of the generator module)."""
    if n == 1:
        return single()
    if p is None:
        p = float(rng.uniform(0.1, 0.9))
    while True:
        G = nx.gnp_random_graph(n, p, seed=int(rng.integers(2**31)))
        if nx.is_connected(G):
            break
        p = min(1.0, p + 0.05)
    return Graph.from_edges(n, [(u, v, int(rng.integers(1, wmax + 1))) for u, v in G.edges()])


# one line per acceptance criterion, printed at the end of the run
ACCEPTANCE: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE:
            terminalreporter.write_line(line)
