import pytest

_CRITERIA = {}


@pytest.fixture
def criterion(request):
    """Record the acceptance line for the running test."""
    label = request.node.get_closest_marker("criterion").args[0]
    _CRITERIA[request.node.nodeid] = [label, "FAIL"]


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    if report.when == "call" and item.nodeid in _CRITERIA:
        _CRITERIA[item.nodeid][1] = "PASS" if report.passed else "FAIL"


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(label): acceptance criterion")


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for label, status in sorted(_CRITERIA.values(), key=lambda v: int(v[0].split(".")[0])):
        terminalreporter.write_line(f"[{status}] {label}")
