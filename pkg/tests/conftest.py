import pytest

from helix import builtin_table1, generate_codebook


@pytest.fixture(scope="session")
def table1():
    return builtin_table1()


@pytest.fixture(scope="session")
def small_codebook():
    # 6 vertices x 4 colors covers every small-graph test
    return generate_codebook(6, 4, 16, 42)
