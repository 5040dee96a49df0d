import pytest

_LINES = pytest.StashKey[list]()


def pytest_configure(config):
    config.stash[_LINES] = []


@pytest.fixture
def criterion_line(request):
    """Record one pass/fail line; all lines are repeated in the terminal summary."""
    lines = request.config.stash[_LINES]

    def emit(number: int, ok: bool, text: str) -> None:
        line = f"criterion {number}: {'PASS' if ok else 'FAIL'}  {text}"
        lines.append((number, line))
        print(line)

    return emit


def pytest_terminal_summary(terminalreporter, config):
    lines = config.stash.get(_LINES, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for _, line in sorted(lines):
            terminalreporter.write_line(line)
