import contextlib

import pytest

_LINES: list[str] = []


@pytest.fixture
def criterion():
    """Context manager recording one PASS/FAIL line per acceptance criterion."""

    @contextlib.contextmanager
    def record(label, detail=""):
        info = {"detail": detail}
        try:
            yield info
        except BaseException:
            line = f"FAIL  {label}  {info['detail']}".rstrip()
            _LINES.append(line)
            print(line)
            raise
        line = f"PASS  {label}  {info['detail']}".rstrip()
        _LINES.append(line)
        print(line)

    return record


def pytest_terminal_summary(terminalreporter):
    if _LINES:
        terminalreporter.write_sep("=", "acceptance criteria")
        for line in _LINES:
            terminalreporter.write_line(line)
