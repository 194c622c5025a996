import pytest

_LINES = pytest.StashKey[list]()


@pytest.fixture
def criterion(request):
    """Record one pass/fail line per acceptance criterion; printed in the summary."""
    lines = request.config.stash.setdefault(_LINES, [])

    def record(label: str, passed: bool, detail: str = "") -> None:
        detail = detail.strip()
        line = f"[{'PASS' if passed else 'FAIL'}] {label}" + (f": {detail}" if detail else "")
        lines.append(line)
        print(line)

    return record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = config.stash.get(_LINES, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
