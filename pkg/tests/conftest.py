import numpy as np
import pytest
from hypothesis import settings

from tfamalgam import make_grid, standard_window
from tfamalgam.experiments import random_tf_localized

settings.register_profile("deterministic", derandomize=True)
settings.load_profile("deterministic")

# one line per acceptance criterion, echoed after the run summary
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def grid16():
    return make_grid(16, 16)


@pytest.fixture(scope="session")
def phi(grid16):
    return standard_window(grid16)


@pytest.fixture()
def rng():
    return np.random.default_rng(42)


@pytest.fixture()
def noisy(grid16, rng):
    """A generic decaying test signal (band-limited noise under an envelope)."""
    return random_tf_localized(grid16, 4.0, rng)
