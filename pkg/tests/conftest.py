import pytest
from hypothesis import strategies as st

from gausscomp.core import Mat2, Vec2
from gausscomp.forms import Form

small = st.integers(-9, 9)
small_vecs = st.builds(Vec2, small, small)


@st.composite
def forms(draw, lo=-9, hi=9):
    a, b, c = (draw(st.integers(lo, hi)) for _ in range(3))
    if a == b == c == 0:
        a = 1
    return Form(a, b, c)


@st.composite
def unimodular(draw, steps=6):
    """Products of the generators of GL2(Z) (elementary moves and swaps)."""
    A = Mat2.identity()
    moves = [Mat2(1, 1, 0, 1), Mat2(1, -1, 0, 1), Mat2(1, 0, 1, 1),
             Mat2(1, 0, -1, 1), Mat2(0, -1, 1, 0), Mat2(0, 1, 1, 0)]
    for _ in range(draw(st.integers(0, steps))):
        A = A @ draw(st.sampled_from(moves))
    return A


@st.composite
def positive_definite(draw):
    while True:
        f = draw(forms(lo=-9, hi=9))
        if f.disc < 0 and f.a > 0:
            return f
        f = Form(abs(f.a) or 1, f.b, abs(f.c) or 1)
        if f.disc < 0:
            return f


_criteria: dict = {}


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    n = dict(report.user_properties).get("criterion")
    if n is not None:
        _criteria.setdefault(n, []).append(report.passed)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_criteria):
        status = "PASS" if all(_criteria[n]) else "FAIL"
        terminalreporter.write_line(f"criterion {n:>2}: {status}")


@pytest.fixture
def criterion(record_property):
    def mark(n):
        record_property("criterion", n)
    return mark
