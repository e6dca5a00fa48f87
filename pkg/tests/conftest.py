import pytest

PAPER_W = 9878785333482266655552223331179
PAPER_X = 3292928444494088885184074443726
PAPER_Y = 2902967144089498477004731971911
PAPER_X2 = 2469696333370566663888055832790
PAPER_Y2 = 386824569443398797078511524330

_criteria: list[tuple[str, bool, str]] = []


@pytest.fixture
def criterion():
    """Record one acceptance line; the summary is printed at session end."""

    def record(name: str, ok: bool, detail: str = "") -> None:
        line = f"{'PASS' if ok else 'FAIL'} {name}" + (f": {detail}" if detail else "")
        print(line)
        _criteria.append((name, ok, detail))
        assert ok, line

    return record


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, detail in _criteria:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'} {name}" + (f": {detail}" if detail else ""))
