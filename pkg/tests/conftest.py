import pytest

from hermitian_cascade.hermitian_catalog import build_pair_from_key, manifest_pairs


@pytest.fixture(scope="session")
def pairs():
    return manifest_pairs()


@pytest.fixture(scope="session")
def e6():
    return build_pair_from_key("E6")


@pytest.fixture(scope="session")
def e7():
    return build_pair_from_key("E7")
