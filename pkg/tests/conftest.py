import pytest

from quatvieta import kernels

ACCEPTANCE_LINES = []


@pytest.fixture(params=sorted(kernels.available_backends()))
def backend(request):
    """Run a test once per importable kernel backend."""
    previous = kernels.set_backend(request.param)
    yield request.param
    kernels.set_backend(previous)


@pytest.fixture
def record():
    def _record(label, ok, detail=""):
        ACCEPTANCE_LINES.append("%s %s  %s" % ("PASS" if ok else "FAIL", label, detail))
        return ok
    return _record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
