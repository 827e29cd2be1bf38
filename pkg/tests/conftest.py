import os

import pytest
from hypothesis import HealthCheck, settings

settings.register_profile("default", max_examples=40, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("thorough", max_examples=300, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

# criterion number -> (title, passed, seconds, notes)
_CRITERIA = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): numbered acceptance criterion")
    config.addinivalue_line("markers", "slow: long-running test")


@pytest.fixture
def notes(request):
    """List the test appends human-readable findings to; shown in the summary."""
    found = []
    request.node._criterion_notes = found
    return found


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    if rep.when == "call" or (rep.when == "setup" and not rep.passed):
        number, title = mark.args
        found = getattr(item, "_criterion_notes", [])
        _CRITERIA[number] = (title, rep.passed, rep.duration, list(found))


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for number in sorted(_CRITERIA):
        title, passed, seconds, found = _CRITERIA[number]
        detail = "; ".join(found)
        tr.write_line(f"criterion {number:2d} {'PASS' if passed else 'FAIL'}  {title} "
                      f"[{seconds:.1f} s]" + (f"  {detail}" if detail else ""))
