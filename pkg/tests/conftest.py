import hypothesis
import pytest
from hypothesis import strategies as st

from ringcodes.linalg import ZpMatrix
from ringcodes.ring import make_ring

hypothesis.settings.register_profile("default", deadline=None, max_examples=60)
hypothesis.settings.register_profile("fast", deadline=None, max_examples=10)
hypothesis.settings.load_profile("default")

SMALL_PRIMES = (2, 3, 5, 7)


@st.composite
def rings(draw, primes=SMALL_PRIMES):
    p = draw(st.sampled_from(primes))
    s = draw(st.integers(0, p - 1))
    return make_ring(p, s)


@st.composite
def ring_elements(draw, ring):
    return ring.element(draw(st.lists(st.integers(0, ring.p - 1), min_size=ring.dim, max_size=ring.dim)))


@st.composite
def zp_matrices(draw, p, k, n):
    rows = draw(st.lists(st.lists(st.integers(0, p - 1), min_size=n, max_size=n), min_size=k, max_size=k))
    return ZpMatrix(p, n, tuple(map(tuple, rows)))


_ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def criterion():
    """Record one pass/fail line per acceptance criterion."""

    def record(number: int, label: str, ok: bool, detail: str = "") -> None:
        status = "PASS" if ok else "FAIL"
        line = f"[{status}] criterion {number}: {label}" + (f" ({detail})" if detail else "")
        _ACCEPTANCE_LINES.append(line)
        print(line)
        assert ok, line

    return record


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
