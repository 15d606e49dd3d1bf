import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from tropluk.linalg import TropMatrix, TropVector  # noqa: E402

ROOT = Path(__file__).resolve().parent.parent
FIXTURES = ROOT / "fixtures"

WALK3 = [["0.6", "0.7", "0.2"], ["0.4", "0.5", "0.7"], ["0.3", "0.2", "0.4"]]
CYCLE4 = [
    ["0.62", "1.00", "0.57", "0.14"],
    ["1.00", "0.18", "0.17", "0.18"],
    ["0.38", "0.59", "0.65", "0.43"],
    ["0.10", "0.18", "0.25", "0.33"],
]
NETWORK5 = [
    ["0.3", "0.1", "0.2", "0", "0.3"],
    ["0.7", "0.3", "0.5", "0.5", "0.3"],
    ["0.3", "0.2", "0.3", "0.5", "0.3"],
    ["0.1", "0.2", "0.1", "0.3", "0.3"],
    ["0.3", "0", "0.2", "0.2", "0.3"],
]
SYM2 = [["0.5", "0.25"], ["0.25", "0.5"]]
ASYM2 = [["0.2", "0.1"], ["0.7", "0.4"]]


def M(rows):
    return TropMatrix(rows)


def V(*entries):
    return TropVector(entries)


@pytest.fixture
def walk3():
    return M(WALK3)


@pytest.fixture
def cycle4():
    return M(CYCLE4)


@pytest.fixture
def network5():
    return M(NETWORK5)


@pytest.fixture
def sym2():
    return M(SYM2)


@pytest.fixture
def asym2():
    return M(ASYM2)


_acceptance = []


def pytest_runtest_logreport(report):
    if "test_acceptance.py" in report.nodeid and report.when == "call":
        _acceptance.append((report.nodeid.split("::")[-1], report.outcome))
    elif "test_acceptance.py" in report.nodeid and report.when == "setup" and report.outcome != "passed":
        _acceptance.append((report.nodeid.split("::")[-1], report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in _acceptance:
        verdict = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"{verdict}  {name}")
