import re

import pytest

from sumboundary import Digraph, UndirectedGraph

# Worked examples with known eccentricities; vertices u1..u6 -> 0..5 and v1..v5 -> 0..4
SIX_VERTEX_EDGES = [
    (0, 1), (1, 0), (1, 2), (2, 1),
    (2, 3), (3, 4), (4, 5), (0, 4), (0, 5), (5, 1), (5, 2), (5, 3),
]
FIVE_VERTEX_EDGES = [(0, 1), (1, 0), (1, 2), (2, 1), (2, 3), (3, 4), (0, 4), (4, 2)]


@pytest.fixture
def six_vertex():
    return Digraph(6, SIX_VERTEX_EDGES)


@pytest.fixture
def five_vertex():
    return Digraph(5, FIVE_VERTEX_EDGES)


@pytest.fixture
def pair():
    return Digraph(2, [(0, 1), (1, 0)])


def dicycle(n):
    return Digraph(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n):
    return UndirectedGraph(n, [(i, i + 1) for i in range(n - 1)])


def pytest_addoption(parser):
    parser.addoption(
        "--kernel-backend",
        choices=["cython", "python"],
        default=None,
        help="force a kernel backend for the whole run",
    )


def pytest_configure(config):
    name = config.getoption("--kernel-backend")
    if name:
        from sumboundary import kernels
        kernels.use_backend(name)


_acceptance = {}


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    m = re.search(r"test_acceptance\.py::test_c(\d+)_", report.nodeid)
    if m:
        _acceptance[int(m.group(1))] = (report.outcome, report.nodeid.split("::")[-1])


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_acceptance):
        outcome, name = _acceptance[num]
        verdict = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"criterion {num:>2}: {verdict}  {name}")
