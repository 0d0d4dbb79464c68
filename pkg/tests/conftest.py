import pytest

from poegraphs import _kernels


@pytest.fixture(scope="session", autouse=True)
def warm_kernels():
    # JIT-compile the numba kernels once so timed assertions measure the
    # algorithms, not compiler latency
    _kernels.warm_up()
