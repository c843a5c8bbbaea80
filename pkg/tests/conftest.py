import pytest

from framecomplex import BundleContext


@pytest.fixture
def ctx12():
    return BundleContext(1, 2)


@pytest.fixture
def ctx22():
    return BundleContext(2, 2)


@pytest.fixture
def ctx32():
    return BundleContext(3, 2)
