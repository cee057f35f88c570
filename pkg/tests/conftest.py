import pytest
from hypothesis import settings

from starsylv import ExactMatrix, Q, StarMode, StarSylvesterSystem

settings.register_profile("exact", deadline=None)
settings.load_profile("exact")

ACCEPTANCE_LINES = []


def record_acceptance(name, ok, detail=""):
    ACCEPTANCE_LINES.append(f"{name}: {'PASS' if ok else 'FAIL'}  {detail}".rstrip())


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def mat(field, rows):
    return ExactMatrix.from_rows(field, rows)


@pytest.fixture
def fixture_1x1():
    """The scalar equation 3x - x = 4, solved by x = 2."""
    return StarSylvesterSystem(Q, StarMode.TRANSPOSE, 1, 1,
                               [(mat(Q, [[3]]), mat(Q, [[1]]), mat(Q, [[4]]))])


FIXTURE_1X1_TEXT = """\
# canonical 1x1 fixture
field Q
star T
dims 1 1 1
A 1
3
B 1
1
C 1
4
"""
