from __future__ import annotations

import json
from pathlib import Path

import pytest

from okzar.okounkov import global_body
from okzar.variety import load_variety

DATA = Path(__file__).resolve().parent.parent / "src" / "okzar" / "data"

INC3 = DATA / "incidence3.json"
INC4 = DATA / "incidence4.json"


@pytest.fixture(scope="session")
def inc3_path() -> Path:
    return INC3


@pytest.fixture(scope="session")
def inc4_path() -> Path:
    return INC4


@pytest.fixture(scope="session")
def v3():
    return load_variety(json.loads(INC3.read_text()))


@pytest.fixture(scope="session")
def v4():
    return load_variety(json.loads(INC4.read_text()))


@pytest.fixture(scope="session")
def body3(v3):
    return global_body(v3)


@pytest.fixture(scope="session")
def body4(v4):
    return global_body(v4)


def pytest_terminal_summary(terminalreporter):
    """One visible line per acceptance criterion, pass or fail."""
    lines = []
    for outcome in ("passed", "failed", "error"):
        for report in terminalreporter.stats.get(outcome, []):
            nodeid = getattr(report, "nodeid", "")
            if "test_acceptance.py::test_criterion" in nodeid:
                name = nodeid.split("::")[-1]
                lines.append((name, outcome.upper()))
    if lines:
        terminalreporter.write_sep("-", "acceptance criteria")
        for name, outcome in sorted(lines):
            terminalreporter.write_line(f"{name}: {outcome}")
