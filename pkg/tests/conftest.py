import pytest

from massform.expr import build_group
from massform.reference import catalog

_GROUPS = {}


def group(name_or_entry):
    """Build (once per session) a catalog group by name."""
    name = getattr(name_or_entry, "name", name_or_entry)
    if name not in _GROUPS:
        entry = next(e for e in catalog() if e.name == name)
        _GROUPS[name] = build_group(entry.expr)
    return _GROUPS[name]


@pytest.fixture(params=[e.name for e in catalog()])
def catalog_group(request):
    return request.param, group(request.param)


# One pass/fail line per acceptance criterion in the terminal summary.
_ACCEPTANCE = []


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance.py" in report.nodeid:
        _ACCEPTANCE.append((report.nodeid.split("::")[-1], report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in _ACCEPTANCE:
        terminalreporter.write_line(f"{'PASS' if outcome == 'passed' else 'FAIL'}  {name}")
