import numpy as np
import pytest

from hyperconic import _backend, _pykernels

ACCEPTANCE = []


def record(criterion, passed, detail=""):
    ACCEPTANCE.append((criterion, bool(passed), detail))


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for crit, ok, detail in ACCEPTANCE:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {crit}  {detail}")


@pytest.fixture
def rng():
    return np.random.default_rng(20240517)


BACKENDS = ["python"]
try:
    from hyperconic import _kernels  # noqa: F401
    BACKENDS.insert(0, "cython")
except ImportError:
    pass


@pytest.fixture(params=BACKENDS)
def backend(request, monkeypatch):
    """Run a test once per available kernel implementation."""
    if request.param == "python":
        monkeypatch.setattr(_backend, "kernels", _pykernels)
        monkeypatch.setattr(_backend, "BACKEND", "python")
    else:
        from hyperconic import _kernels
        monkeypatch.setattr(_backend, "kernels", _kernels)
        monkeypatch.setattr(_backend, "BACKEND", "cython")
    return request.param
