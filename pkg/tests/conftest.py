import pytest
from hypothesis import HealthCheck, settings

from latglue.windowq import generate_patch, make_window

settings.register_profile(
    "default", deadline=None, suppress_health_check=[HealthCheck.too_slow], print_blob=True
)
settings.load_profile("default")


@pytest.fixture(scope="session")
def window():
    return make_window()


@pytest.fixture(scope="session")
def patch3(window):
    return generate_patch(window, 3)


@pytest.fixture(scope="session")
def patch8(window):
    return generate_patch(window, 8)


@pytest.fixture(scope="session")
def patch12(window):
    return generate_patch(window, 12)
