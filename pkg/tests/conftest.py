import pytest

from snwalk import kernels


@pytest.fixture(params=sorted(kernels.available_backends()))
def backend(request):
    """Run the test once per available kernel backend."""
    previous = kernels.backend_name()
    kernels.set_backend(request.param)
    yield request.param
    kernels.set_backend(previous)


def pytest_report_header(config):
    return f"snwalk kernel backends: {sorted(kernels.available_backends())}"
