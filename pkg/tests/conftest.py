import pytest

_CRITERIA: dict[int, tuple[bool, str]] = {}


class CriterionLog:
    """Collects one verdict per acceptance criterion; printed at the end of the run."""

    def record(self, number: int, ok: bool, detail: str) -> None:
        line = f"criterion {number:2d}: {'PASS' if ok else 'FAIL'}  {detail}"
        print(line)
        _CRITERIA[number] = (ok, line)


@pytest.fixture(scope="session")
def criterion():
    return CriterionLog()


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_CRITERIA):
        terminalreporter.write_line(_CRITERIA[n][1])
