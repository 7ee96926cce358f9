import random

import pytest
from hypothesis import strategies as st

from universes import LabelAssignment, SystemShape, schema_digits


def random_assignment(rng: random.Random, shape: SystemShape, alphabet: int | None = None):
    # small alphabets make coincident labels (0 digits) common
    alphabet = alphabet or rng.randint(1, shape.variable_count + 1)
    values = [rng.randrange(alphabet) for _ in range(shape.variable_count)]
    return LabelAssignment.from_variables(shape, values)


@st.composite
def shapes(draw, max_m=3, max_n=2):
    m = draw(st.integers(1, max_m))
    n = draw(st.integers(0, max_n))
    obs = draw(st.sets(st.integers(0, max(n - 1, 0)), max_size=n)) if n else set()
    return SystemShape(m, n, tuple(obs) if draw(st.booleans()) else None)


@st.composite
def assignments(draw, max_m=3, max_n=2):
    shape = draw(shapes(max_m, max_n))
    k = draw(st.integers(1, shape.variable_count))
    values = draw(st.lists(st.integers(0, k - 1), min_size=shape.variable_count,
                           max_size=shape.variable_count))
    return LabelAssignment.from_variables(shape, values)


@pytest.fixture
def s21():
    return schema_digits(SystemShape(2, 1))


# Acceptance criteria report: one line per marked test in the terminal summary.
_criteria = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


def pytest_runtest_makereport(item, call):
    mark = item.get_closest_marker("criterion")
    if mark is None or call.when != "call":
        return
    number, title = mark.args
    ok = call.excinfo is None
    prev = _criteria.get(number, (title, True))
    _criteria[number] = (title, prev[1] and ok)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        title, ok = _criteria[number]
        terminalreporter.write_line(f"criterion {number}: {'PASS' if ok else 'FAIL'}  {title}")
