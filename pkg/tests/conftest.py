import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from padovan_repdigits.numerics import plastic_roots  # noqa: E402
from padovan_repdigits.padovan import binet_coefficients  # noqa: E402
from padovan_repdigits.reduction import PUBLISHED_M, reduction_setup, stage1, stage2, stage3  # noqa: E402

WORKERS = max(1, min(8, os.cpu_count() or 1))

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(scope="session")
def roots400():
    return plastic_roots(400)


@pytest.fixture(scope="session")
def coeffs400(roots400):
    return binet_coefficients(roots400)


@pytest.fixture(scope="session")
def setup400():
    return reduction_setup(400)


@pytest.fixture(scope="session")
def stages_published_M(setup400):
    """The three reduction stages at M = 3e48, each range fed by the previous bound."""
    s1 = stage1(PUBLISHED_M, setup400)
    s2 = stage2(PUBLISHED_M, k_max=s1.bound, setup=setup400)
    s3 = stage3(PUBLISHED_M, k_max=s1.bound + s2.bound, s_max=s2.bound, setup=setup400,
                workers=WORKERS)
    return s1, s2, s3


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def verify_all_default():
    from padovan_repdigits.cli import RunConfig, cmd_verify_all
    return cmd_verify_all(RunConfig(threads=WORKERS))
