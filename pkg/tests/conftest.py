import pytest

from cheralg.suites import make_env


# Session-scoped environments so expensive per-context caches (osp
# generators, projected elements) are shared across test modules.

@pytest.fixture(scope="session")
def env_a12():
    return make_env("A1@2")


@pytest.fixture(scope="session")
def env_b22():
    return make_env("B2@2")


@pytest.fixture(scope="session")
def env_a23():
    return make_env("A2@3")


@pytest.fixture(scope="session")
def env_a15():
    return make_env("A1@5")


@pytest.fixture(scope="session")
def env_a16():
    return make_env("A1@6")


@pytest.fixture(scope="session")
def ctx_a12(env_a12):
    return env_a12.ctx


@pytest.fixture(scope="session")
def ctx_b22(env_b22):
    return env_b22.ctx


@pytest.fixture(scope="session")
def ctx_a23(env_a23):
    return env_a23.ctx
