import pytest
from hypothesis import strategies as st

from dessins.perm import Permutation

_LINES = []


def record_line(line: str) -> None:
    _LINES.append(line)


@pytest.fixture
def criterion_lines():
    return record_line


def pytest_terminal_summary(terminalreporter):
    if _LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_LINES):
            terminalreporter.write_line(line)


def perms(n):
    return st.permutations(list(range(n))).map(Permutation)


@st.composite
def perm_pairs(draw, max_degree=12, count=2):
    n = draw(st.integers(1, max_degree))
    return tuple(draw(perms(n)) for _ in range(count))
