import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "default",
    max_examples=50,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")


@pytest.fixture
def p2n6():
    from genfermat import GroupParams

    return GroupParams(p=2, n=6, d=2)


@pytest.fixture
def p3n4():
    from genfermat import GroupParams

    return GroupParams(p=3, n=4, d=2)
