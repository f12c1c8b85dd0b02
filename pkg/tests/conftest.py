import pytest

from cyclepack.core import Multigraph, SimpleGraph

_CRITERIA: dict[int, dict] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion covered by the test")


def pytest_collection_modifyitems(items):
    for item in items:
        mark = item.get_closest_marker("criterion")
        if mark is not None:
            number, title = mark.args
            entry = _CRITERIA.setdefault(number, {"title": title, "outcomes": []})
            entry.setdefault("items", set()).add(item.nodeid)


def pytest_runtest_logreport(report):
    for number, entry in _CRITERIA.items():
        if report.nodeid in entry.get("items", ()):
            if report.when == "call" or (report.when == "setup" and not report.passed):
                entry["outcomes"].append(report.outcome)


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_CRITERIA):
        entry = _CRITERIA[number]
        outcomes = entry["outcomes"]
        if not outcomes:
            status = "NOT RUN"
        elif all(o == "passed" for o in outcomes):
            status = "PASS"
        else:
            status = "FAIL"
        terminalreporter.write_line(f"criterion {number} {entry['title']}: {status}")


@pytest.fixture
def petersen() -> SimpleGraph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return SimpleGraph(10, outer + spokes + inner)


def simple_multigraph(n, edges) -> Multigraph:
    return Multigraph(n, [(u, v, 1) for u, v in edges])
