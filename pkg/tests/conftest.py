import pytest

from raaggrowth import SimpleGraph

# name -> "PASS" / "FAIL", filled by tests/test_acceptance.py
ACCEPTANCE_RESULTS: dict[str, str] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, status in ACCEPTANCE_RESULTS.items():
        terminalreporter.write_line(f"{status:4s}  {name}")


@pytest.fixture
def z1():
    return SimpleGraph.make(["a"], [])


@pytest.fixture
def z2():
    return SimpleGraph.make(["a", "b"], [["a", "b"]])


@pytest.fixture
def f2():
    return SimpleGraph.make(["a", "b"], [])


@pytest.fixture
def path4():
    return SimpleGraph.make(["a", "b", "c", "d"], [["a", "b"], ["b", "c"], ["c", "d"]])


@pytest.fixture
def edgeless4():
    return SimpleGraph.make(["a", "b", "c", "d"], [])


def complete_graph(n):
    labels = [f"v{i}" for i in range(n)]
    return SimpleGraph.make(labels, [[labels[i], labels[j]] for i in range(n) for j in range(i + 1, n)])


def z_star_zn(n):
    labels = ["a"] + [f"b{i}" for i in range(n)]
    return SimpleGraph.make(labels, [[f"b{i}", f"b{j}"] for i in range(n) for j in range(i + 1, n)])


def all_three_vertex_graphs():
    """All 8 graphs on labeled vertices x, y, z."""
    pairs = [("x", "y"), ("x", "z"), ("y", "z")]
    graphs = []
    for mask in range(8):
        edges = [list(pairs[i]) for i in range(3) if mask >> i & 1]
        graphs.append(SimpleGraph.make(["x", "y", "z"], edges))
    return graphs
