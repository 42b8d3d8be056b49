import time
from collections import defaultdict

import pytest

# criterion number -> list of (nodeid, passed)
_OUTCOMES: dict[int, list[tuple[str, bool]]] = defaultdict(list)
_CRITERIA = {}
_START = time.perf_counter()
_FULL_RUN = False

# the property criterion also bounds the wall time of a complete run
SUITE_BUDGET_S = 60.0
BUDGET_CRITERION = 8


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion the test belongs to")


def pytest_collection_modifyitems(items):
    global _FULL_RUN
    _FULL_RUN = len({item.path for item in items}) > 1 and bool(items)
    for item in items:
        mark = item.get_closest_marker("criterion")
        if mark:
            _CRITERIA[item.nodeid] = mark.args[0]


def pytest_runtest_logreport(report):
    n = _CRITERIA.get(report.nodeid)
    if n is None:
        return
    if report.when == "call" or (report.when == "setup" and not report.passed):
        _OUTCOMES[n].append((report.nodeid, report.passed))


def pytest_terminal_summary(terminalreporter):
    if not _OUTCOMES:
        return
    tr = terminalreporter
    elapsed = time.perf_counter() - _START
    tr.section("acceptance criteria")
    for n in sorted(_OUTCOMES):
        results = _OUTCOMES[n]
        failed = [nid for nid, ok in results if not ok]
        if n == BUDGET_CRITERION and _FULL_RUN and elapsed > SUITE_BUDGET_S:
            failed.append(f"full suite took {elapsed:.1f} s")
        status = "PASS" if not failed else "FAIL"
        tr.write_line(f"criterion {n}: {status} ({len(results) - len(failed)}/{len(results)} checks)")
        for nid in failed:
            tr.write_line(f"    failed: {nid.split('::', 1)[-1]}")
    tr.write_line(f"session wall time {elapsed:.1f} s (budget {SUITE_BUDGET_S:.0f} s for the full suite)")


def pytest_sessionfinish(session, exitstatus):
    if _FULL_RUN and exitstatus == 0 and time.perf_counter() - _START > SUITE_BUDGET_S:
        session.exitstatus = 1
