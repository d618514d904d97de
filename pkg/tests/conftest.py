import pytest

from skeletal import _kernels, _pykernels

ACCEPTANCE_LINES = []

try:
    from skeletal import _ckernels
except ImportError:  # extension not built
    _ckernels = None


@pytest.fixture(params=["python", "cython"])
def kernel_module(request):
    if request.param == "python":
        return _pykernels
    if _ckernels is None:
        pytest.skip("compiled kernels not built")
    return _ckernels


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section(f"acceptance criteria (backend: {_kernels.BACKEND})")
    for _, line in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(line)
