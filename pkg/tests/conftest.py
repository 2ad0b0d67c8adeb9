import pytest

from zeroforce.generators import all_connected_chordal_graphs, fig1_unicyclic


@pytest.fixture(scope="session")
def chordal_upto7():
    return [g for n in range(1, 8) for g in all_connected_chordal_graphs(n)]


@pytest.fixture
def g5():
    return fig1_unicyclic(5)


_LINES = pytest.StashKey[list]()


@pytest.fixture
def acceptance(request, capsys):
    """Report one PASS/FAIL line per criterion, live and again in the summary."""

    def report(number: int, ok: bool, detail: str) -> None:
        line = f"criterion {number}: {'PASS' if ok else 'FAIL'} - {detail}"
        request.config.stash.setdefault(_LINES, []).append(line)
        with capsys.disabled():
            print(f"\n{line}")

    return report


def pytest_terminal_summary(terminalreporter, config):
    lines = config.stash.get(_LINES, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
