"""Collects acceptance outcomes and prints one line per criterion."""

import pytest

_OUTCOMES: dict[int, tuple[str, bool]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None or report.when not in ("setup", "call"):
        return
    number, title = mark.args
    ok = report.passed
    prev = _OUTCOMES.get(number, (title, True))
    if report.when == "setup" and ok:
        return
    _OUTCOMES[number] = (title, prev[1] and ok)


def pytest_terminal_summary(terminalreporter):
    if not _OUTCOMES:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_OUTCOMES):
        title, ok = _OUTCOMES[number]
        terminalreporter.write_line(f"criterion {number}: {'PASS' if ok else 'FAIL'}  {title}")
