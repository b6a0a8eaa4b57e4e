import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "default",
    deadline=None,
    max_examples=60,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")


@pytest.fixture(scope="session")
def g2_jordan():
    from ggt.wildtwo import build_g2_jordan
    return build_g2_jordan()


@pytest.fixture(scope="session")
def so_wild():
    from ggt.wildtwo import build_so_wild
    cache = {}

    def get(m):
        if m not in cache:
            cache[m] = build_so_wild(m)
        return cache[m]

    return get
