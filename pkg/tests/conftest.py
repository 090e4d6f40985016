import numpy as np
import pytest

from QCLDPC import settings
from QCLDPC.constructions import ex1, ex2, hagiwara_imai, mackay_b, type1_example, type2_example
from QCLDPC.exponent import ExponentMatrix, expand_to_binary
from QCLDPC.shared_context import CodeContextManager


def pytest_collection_modifyitems(config, items):
    if settings.RUN_SLOW:
        return
    skip_slow = pytest.mark.skip(reason="set EAQC_RUN_SLOW=1 to run")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)


@pytest.fixture(scope="session")
def ex1_code():
    return ex1()


@pytest.fixture(scope="session")
def ex2_code():
    return ex2()


@pytest.fixture(scope="session")
def mackay_code():
    return mackay_b()


@pytest.fixture(scope="session")
def hi_code():
    return hagiwara_imai()


@pytest.fixture(scope="session")
def type1_code():
    return type1_example()


@pytest.fixture(scope="session")
def type2_code():
    return type2_example()


@pytest.fixture(scope="session")
def array_code():
    """Type-I array code r=5, J=3, L=4 (n=20, girth 6, d=6)."""
    E = ExponentMatrix.from_rows(5, [[(j * l) % 5 for l in range(4)] for j in range(3)])
    return expand_to_binary(E)


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


@pytest.fixture
def clean_contexts():
    CodeContextManager.cleanup_all()
    yield
    CodeContextManager.cleanup_all()
