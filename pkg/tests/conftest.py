import pytest

from semiprob import enumerate_semigroups


@pytest.fixture(scope="session")
def upto3():
    return [S for n in (1, 2, 3) for S in enumerate_semigroups(n)]


@pytest.fixture(scope="session")
def upto4():
    return [S for n in (1, 2, 3, 4) for S in enumerate_semigroups(n)]


_ACCEPTANCE = []


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep


@pytest.fixture
def criterion(request):
    """Record one acceptance line: ``criterion(cid, description)``."""
    import time

    info = {}
    start = time.perf_counter()
    yield lambda cid, text: info.update(cid=cid, text=text)
    rep = getattr(request.node, "rep_call", None)
    if info and rep is not None:
        status = "PASS" if rep.passed else "FAIL"
        elapsed = time.perf_counter() - start
        _ACCEPTANCE.append(f"[{status}] {info['cid']:>4}  {info['text']}  ({elapsed:.2f}s)")


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_ACCEPTANCE, key=lambda s: int(s.split()[1][2:])):
            terminalreporter.write_line(line)
