import pytest

from elemsets import fixtures

ACCEPTANCE = pytest.StashKey[list]()


@pytest.fixture
def pi1():
    return fixtures.load("pi1")


@pytest.fixture
def program3():
    return fixtures.load("program3")


@pytest.fixture
def program5():
    return fixtures.load("program5")


@pytest.fixture
def program6():
    return fixtures.load("program6")


@pytest.fixture
def p2():
    return fixtures.load("p2")


@pytest.fixture
def d1():
    return fixtures.load("d1")


def pytest_configure(config):
    config.stash[ACCEPTANCE] = []


@pytest.fixture
def criterion(request):
    """Record one acceptance line (printed in the terminal summary) and assert it."""
    def record(name, ok, detail=""):
        line = f"[{'PASS' if ok else 'FAIL'}] {name}" + (f" ({detail})" if detail else "")
        request.config.stash[ACCEPTANCE].append(line)
        print(line)
        assert ok, line
    return record


def pytest_terminal_summary(terminalreporter, config):
    lines = config.stash.get(ACCEPTANCE, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
