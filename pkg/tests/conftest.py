import pytest

from clutterlab.clutter_core import validate
from clutterlab.harness.generators import f6


@pytest.fixture
def delta3():
    return validate(3, [{1, 2}, {1, 3}, {2, 3}])


@pytest.fixture
def c4():
    return validate(4, [{1, 2}, {2, 3}, {3, 4}, {1, 4}])


@pytest.fixture
def f6_clutter():
    return f6()


@pytest.fixture
def two_singletons():
    return validate(2, [{1}, {2}])


_LINES = pytest.StashKey[list]()


@pytest.fixture
def acceptance_line(request):
    """Record one PASS/FAIL line; the lines are echoed in the terminal summary."""
    lines = request.config.stash.setdefault(_LINES, [])

    def record(number, title, ok, detail=""):
        line = f"[{'PASS' if ok else 'FAIL'}] criterion {number:>2}: {title}" + (f" ({detail})" if detail else "")
        lines.append((number, line))
        print(line)
        return ok

    return record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = config.stash.get(_LINES, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for _, line in sorted(lines):
            terminalreporter.write_line(line)
