import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from gridweave._kernels import available_backends, load_backend  # noqa: E402

ACCEPTANCE_LINES = []


@pytest.fixture(params=available_backends())
def kernels(request):
    return load_backend(request.param)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(line)
