import random
import sys
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from condcolor.graph import Graph  # noqa: E402

settings.register_profile(
    "condcolor", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("condcolor")


def random_connected(n: int, rng: random.Random, extra: float = 0.35) -> Graph:
    """Random spanning tree plus each remaining pair with probability ``extra``."""
    edges = set()
    order = list(range(n))
    rng.shuffle(order)
    for i in range(1, n):
        u, v = order[i], order[rng.randrange(i)]
        edges.add((min(u, v), max(u, v)))
    for u in range(n):
        for v in range(u + 1, n):
            if (u, v) not in edges and rng.random() < extra:
                edges.add((u, v))
    return Graph.from_edges(n, sorted(edges))


@st.composite
def connected_graphs(draw, min_n: int = 2, max_n: int = 7):
    n = draw(st.integers(min_n, max_n))
    parents = [draw(st.integers(0, i - 1)) for i in range(1, n)]
    edges = {(p, i) for i, p in zip(range(1, n), parents)}
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n) if (u, v) not in edges]
    extra = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs))) if pairs else []
    return Graph.from_edges(n, sorted(edges | set(extra)))


@pytest.fixture
def rng():
    return random.Random(20261016)


def pytest_terminal_summary(terminalreporter):
    """One pass/fail line per acceptance criterion."""
    results = {}
    for status in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(status, []):
            nodeid = getattr(rep, "nodeid", "")
            if "test_acceptance.py::test_criterion_" not in nodeid:
                continue
            if rep.when != "call" and status == "passed":
                continue
            name = nodeid.split("::")[-1]
            number = int(name.split("_")[2])
            if results.get(number, ("", "PASS"))[1] != "FAIL":
                results[number] = (name, "PASS" if status == "passed" else "FAIL")
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(results):
        name, verdict = results[number]
        terminalreporter.write_line(f"criterion {number:2d}: {verdict}  ({name})")
