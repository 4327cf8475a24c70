import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

settings.register_profile(
    "fixed",
    max_examples=100,
    derandomize=True,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("fixed")


def letters(q: int, max_size: int = 12):
    return st.lists(st.integers(1, q).flatmap(lambda j: st.sampled_from((j, -j))), max_size=max_size)


@pytest.fixture(autouse=True)
def _fresh_catalog(monkeypatch):
    # catalog lookups are cached per path; a test that overrides the path must not leak
    from milnor import catalog

    catalog._load.cache_clear()
    yield
    catalog._load.cache_clear()
