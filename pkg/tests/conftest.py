import hashlib
import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

DATA = os.path.join(os.path.dirname(__file__), "data")


def fixed_seed(label: str) -> bytes:
    return hashlib.shake_256(label.encode()).digest(16384)


@pytest.fixture
def test_seed():
    return fixed_seed("qpp-rng test seed")


@pytest.fixture(scope="session")
def english_sample():
    with open(os.path.join(DATA, "english.txt"), "rb") as f:
        return f.read()


def english_corpus(size: int) -> bytes:
    with open(os.path.join(DATA, "english.txt"), "rb") as f:
        text = f.read()
    reps = -(-size // len(text))
    return (text * reps)[:size]


# -- acceptance summary: one line per criterion ---------------------------------

_acceptance_lines = []


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(label): acceptance criterion reported in the summary")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        detail = "; ".join(str(v) for k, v in item.user_properties if k == "detail")
        status = "PASS" if report.passed else "FAIL"
        _acceptance_lines.append(f"{status}  {marker.args[0]}" + (f"  [{detail}]" if detail else ""))


def pytest_terminal_summary(terminalreporter):
    if _acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in _acceptance_lines:
            terminalreporter.write_line(line)
