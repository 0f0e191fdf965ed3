import os

import pytest
from hypothesis import HealthCheck, settings

from gtutte.abelian_core import free_group, group_from_presentation, make_list

settings.register_profile(
    "default", max_examples=40, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

ACCEPTANCE_LINES = []


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: long-running computations, run with GTUTTE_SLOW=1")


def pytest_collection_modifyitems(config, items):
    if os.environ.get("GTUTTE_SLOW"):
        return
    skip = pytest.mark.skip(reason="slow; set GTUTTE_SLOW=1 to run")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)


@pytest.fixture
def example85():
    """Z + Z/4 with alpha = (2, 1), beta = (0, 2)."""
    return make_list(group_from_presentation(2, [(0, 4)]), [(2, 1), (0, 2)], ["alpha", "beta"])


@pytest.fixture
def remark82():
    """Z^2 with s = (0, 2), b = (2, 1), c = (0, 1)."""
    return make_list(free_group(2), [(0, 2), (2, 1), (0, 1)], ["s", "b", "c"])


@pytest.fixture
def triangle():
    return make_list(free_group(2), [(1, 0), (0, 1), (1, 1)])
