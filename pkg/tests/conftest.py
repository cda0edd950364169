import os

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from sgfrust import Edge, Sign, SignedGraph

settings.register_profile(
    "default",
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.data_too_large],
)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

ACCEPTANCE_LINES = []


@st.composite
def signed_graphs(draw, max_vertices=8, max_edges=13, loops=True, min_edges=0):
    """Random signed multigraph with canonical names ``v0..`` and ``e0..``."""
    n = draw(st.integers(1, max_vertices))
    m = draw(st.integers(min_edges, max_edges))
    vs = [f"v{i}" for i in range(n)]
    es = []
    for i in range(m):
        u = draw(st.integers(0, n - 1))
        if loops and draw(st.integers(0, 9)) == 0:
            v = u
        else:
            v = draw(st.integers(0, n - 1))
            if v == u and n > 1:
                v = (u + 1) % n
        sign = Sign.NEGATIVE if draw(st.booleans()) else Sign.POSITIVE
        es.append(Edge(f"e{i}", vs[u], vs[v], sign))
    return SignedGraph(vs, es)


@pytest.fixture
def acceptance_line():
    def record(criterion, passed, detail=""):
        line = f"{criterion}: {'PASS' if passed else 'FAIL'}  {detail}".rstrip()
        ACCEPTANCE_LINES.append(line)
        print(line)
        return passed
    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
