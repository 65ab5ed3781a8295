import re

import pytest

from thetaroot import theta

_CRITERION = re.compile(r"test_criterion_(\d+)_(\w+)")
_outcomes: dict[int, tuple[str, str]] = {}


@pytest.fixture(scope="session")
def xi200():
    return theta.xi_via_theta(200)


@pytest.fixture(scope="session")
def xi300():
    return theta.xi_via_theta(300)


def pytest_runtest_logreport(report):
    match = _CRITERION.search(report.nodeid)
    if not match or "test_acceptance.py" not in report.nodeid:
        return
    number = int(match.group(1))
    if report.when == "call" or report.outcome != "passed":
        if number not in _outcomes or _outcomes[number][0] == "PASS":
            _outcomes[number] = ("PASS" if report.passed else "FAIL", match.group(2))


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_outcomes):
        status, name = _outcomes[number]
        terminalreporter.write_line(f"criterion {number:2d}  {status}  {name.replace('_', ' ')}")
