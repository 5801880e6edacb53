import pytest

from lincode import _backend

KERNELS = [pytest.param(_backend.python_kernel, id="python")]
if _backend.compiled_kernel is not None:
    KERNELS.append(pytest.param(_backend.compiled_kernel, id="cython"))

_criteria: list[str] = []


@pytest.fixture(params=KERNELS)
def kernel(request):
    return request.param


@pytest.fixture
def record_criterion():
    return _criteria.append


def pytest_terminal_summary(terminalreporter):
    if _criteria:
        terminalreporter.section("acceptance criteria")
        for line in _criteria:
            terminalreporter.write_line(line)
