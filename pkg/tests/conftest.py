import pytest

from cylspin import OperatingPoint, make_params

# one PASS/FAIL line per acceptance criterion at the end of the run
_acceptance_results: dict[str, str] = {}


def pytest_runtest_logreport(report):
    if "test_acceptance" not in report.nodeid:
        return
    if report.when == "call":
        _acceptance_results[report.nodeid] = "PASS" if report.passed else "FAIL"
    elif report.when == "setup" and report.failed:
        _acceptance_results[report.nodeid] = "ERROR"


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _acceptance_results:
        return
    terminalreporter.section("acceptance criteria")
    for nodeid in sorted(_acceptance_results):
        name = nodeid.split("::")[-1]
        terminalreporter.write_line(f"{_acceptance_results[nodeid]}  {name}")


@pytest.fixture(scope="session")
def fig_params():
    """The figure-reproduction configuration: R = 6 via C = 30, dv = v0 = 0.02."""
    return make_params(30.0, 0.02, 0.02, 1.0)


@pytest.fixture(scope="session")
def op_half():
    return OperatingPoint(0.5)
