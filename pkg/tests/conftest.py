import re
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

import oracles  # noqa: E402
from cliquecover.graph import from_edge_list  # noqa: E402


def labeled_graphs(n):
    for es in oracles.all_graph_edge_sets(n):
        yield from_edge_list(n, es)


def labeled_graphs_upto(n, start=0):
    for k in range(start, n + 1):
        yield from labeled_graphs(k)


@pytest.fixture(scope="session")
def graphs_upto5():
    return list(labeled_graphs_upto(5))


@pytest.fixture(scope="session")
def graphs6():
    return list(labeled_graphs(6))


_CRITERION = re.compile(r"test_criterion_(\d+)")


def pytest_terminal_summary(terminalreporter):
    """One pass/fail line per acceptance criterion that ran."""
    rows = {}
    for outcome in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(outcome, []):
            m = _CRITERION.search(getattr(rep, "nodeid", ""))
            if m and getattr(rep, "when", "call") in ("call", "setup"):
                if outcome != "passed" or int(m.group(1)) not in rows:
                    rows[int(m.group(1))] = "PASS" if outcome == "passed" else "FAIL"
    if not rows:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    for k in sorted(rows):
        terminalreporter.write_line(f"criterion {k}: {rows[k]}")
