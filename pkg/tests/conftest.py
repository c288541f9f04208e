import pytest
from hypothesis import settings

settings.register_profile("repo", deadline=None, max_examples=60, derandomize=True)
settings.load_profile("repo")


@pytest.fixture(scope="session")
def gl2_3():
    from modclifford.sl2gl2 import gl2

    return gl2(3)


@pytest.fixture(scope="session")
def sl2_3():
    from modclifford.sl2gl2 import sl2

    return sl2(3)
