import os

import pytest

from wavechange import changepoint

ACCEPTANCE_LINES = []


@pytest.fixture(scope="session", autouse=True)
def _mc_cache(tmp_path_factory):
    # keep Monte Carlo tables out of the user's cache during tests
    if not os.environ.get(changepoint.CACHE_ENV):
        os.environ[changepoint.CACHE_ENV] = str(tmp_path_factory.mktemp("mc_cache"))
    yield


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
