import pytest

from qconj.rep.verma import VermaModule
from qconj.rep.tensor import TensorModule
from qconj.rep.braiding import build_Q


def pytest_configure(config):
    config.addinivalue_line('markers', 'slow: exact computations at n >= 3 or with large cutoffs')


@pytest.fixture(params=[2, 3])
def rank(request):
    return request.param


@pytest.fixture
def q_matrix(rank):
    return build_Q(rank)


@pytest.fixture(params=[
    (4, 2, 0),
    (0, 3, 1),
])
def verma3(request):
    return VermaModule(request.param, 4)


@pytest.fixture
def tensor3():
    return TensorModule(VermaModule((4, 2, 0), 2))


@pytest.fixture
def tmp_h5_file(tmp_path):
    yield str(tmp_path / 'test.h5')
