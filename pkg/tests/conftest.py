import pytest

_LINES_KEY = pytest.StashKey[list]()


def pytest_configure(config):
    config.stash[_LINES_KEY] = []


@pytest.fixture
def verdict(request):
    """Record one acceptance line; the summary prints them all in order."""
    lines = request.config.stash[_LINES_KEY]

    def record(number: int, title: str, ok: bool, detail: str = "") -> bool:
        text = f"{'PASS' if ok else 'FAIL'}  criterion {number:2d}  {title}"
        lines.append((number, text + (f"  [{detail}]" if detail else "")))
        return ok

    return record


def pytest_terminal_summary(terminalreporter, config):
    lines = config.stash.get(_LINES_KEY, [])
    if not lines:
        return
    terminalreporter.section("acceptance criteria")
    for _, text in sorted(lines):
        terminalreporter.write_line(text)
