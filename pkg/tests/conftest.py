from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

settings.register_profile(
    "default", deadline=None, max_examples=40, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")

# small rationals, same range as the seeded sampler
fractions = st.builds(Fraction, st.integers(-9, 9), st.integers(1, 4))
nonzero_fractions = fractions.filter(bool)
seeds = st.integers(0, 2**16)


def vectors(m):
    return st.tuples(*[fractions] * m)


ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def acceptance_log():
    return ACCEPTANCE_LINES


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
