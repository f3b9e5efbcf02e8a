import pytest

from garside.artin import artin
from garside.bkl import bkl
from garside.words import parse_word


@pytest.fixture
def b3():
    return artin(3)


@pytest.fixture
def b4():
    return artin(4)


@pytest.fixture
def word():
    """``word(g, "s1 s2^-1")`` -> normal form."""
    return parse_word


@pytest.fixture(params=[3, 4])
def bkl_n(request):
    return bkl(request.param)


def pytest_configure(config):
    config.criteria = []


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    label = mark.args[0]
    if rep.when == "call":
        status = "PASS" if rep.passed else "FAIL"
        note = getattr(item, "criterion_note", "")
        item.config.criteria.append((status, label, note))


def pytest_terminal_summary(terminalreporter, config):
    if not config.criteria:
        return
    terminalreporter.section("acceptance criteria")
    for status, label, note in config.criteria:
        terminalreporter.write_line(f"{status}  {label}" + (f"  ({note})" if note else ""))
