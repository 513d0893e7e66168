import functools
import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from cograded_hopf import examples as ex  # noqa: E402

CRITERIA = {
    1: "axiom suite on the catalogue",
    2: "integral existence and uniqueness",
    3: "modular apparatus",
    4: "smash formulas",
    5: "duality",
    6: "dual-basis identities",
    7: "negative tests",
    8: "determinism",
}

_outcomes = {}
_notes = {}


def note(criterion: int, text: str) -> None:
    _notes.setdefault(criterion, []).append(text)


@functools.lru_cache(maxsize=None)
def build(name):
    return ex.catalogue()[name]()


CATALOGUE = list(ex.catalogue())


@pytest.fixture(scope="session")
def catalogue_systems():
    return {name: build(name) for name in CATALOGUE}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion this test belongs to")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    n = marker.args[0]
    if rep.when == "call" or rep.failed:
        ok = rep.passed or rep.skipped and rep.when == "call"
        _outcomes.setdefault(n, []).append(bool(ok) and not rep.failed)


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for n, title in CRITERIA.items():
        results = _outcomes.get(n)
        if results is None:
            status = "NOT RUN"
        else:
            status = "PASS" if all(results) else "FAIL"
        line = f"criterion {n} [{title}]: {status} ({sum(results or [])}/{len(results or [])} tests)"
        tr.write_line(line)
        for text in _notes.get(n, []):
            tr.write_line(f"    note: {text}")
