import pytest

from ckdomains.primes import cached_table


@pytest.fixture(scope="session")
def table_1e5():
    return cached_table(100_000)


@pytest.fixture(scope="session")
def table_1e6():
    return cached_table(1_000_000)
