import numpy as np
import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from neglab import ProbDist, make_dist

settings.register_profile(
    "neglab",
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("neglab")


@st.composite
def distributions(draw, min_n=2, max_n=16, min_entry=1e-6):
    """Random strictly positive points on the simplex."""
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    raw = draw(
        st.lists(
            st.floats(min_value=min_entry, max_value=1.0),
            min_size=n,
            max_size=n,
        )
    )
    arr = np.asarray(raw)
    return ProbDist(arr / arr.sum())


@st.composite
def distribution_pairs(draw, min_n=2, max_n=16):
    """Two independent distributions on the same simplex."""
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    def one():
        raw = np.asarray(
            draw(st.lists(st.floats(min_value=1e-6, max_value=1.0), min_size=n, max_size=n))
        )
        return ProbDist(raw / raw.sum())
    return one(), one()


def random_simplex(rng, n):
    """Dirichlet draw as a ProbDist."""
    return ProbDist(rng.dirichlet(np.ones(n)))


@pytest.fixture
def p4():
    return make_dist([1 / 3, 1 / 6, 1 / 6, 1 / 3])


@pytest.fixture
def p3():
    return make_dist([2 / 3, 1 / 6, 1 / 6])


@pytest.fixture
def q5():
    return make_dist([2 / 3, 1 / 6, 1 / 6, 0.0, 0.0])


@pytest.fixture
def p5_peak():
    return make_dist([1 / 8, 1 / 8, 1 / 2, 1 / 8, 1 / 8])
