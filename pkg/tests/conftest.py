import pytest

_ACCEPTANCE = []


@pytest.fixture
def criterion():
    """Record one acceptance line and fail the test when it does not hold."""

    def record(label, passed, detail):
        line = f"{'PASS' if passed else 'FAIL'} [{label}] {detail}"
        _ACCEPTANCE.append(line)
        print(line)
        assert passed, line

    return record


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_ACCEPTANCE, key=_order):
            terminalreporter.write_line(line)


def _order(line):
    label = line.split("[", 1)[1].split("]", 1)[0]
    num = "".join(ch for ch in label if ch.isdigit())
    return (int(num) if num else 0, label)
