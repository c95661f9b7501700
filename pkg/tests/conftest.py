import pytest
from hypothesis import HealthCheck, settings

from invcent.graphs import Graph
from invcent.targets import CentralityTarget

settings.register_profile(
    "default",
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")

PAW_TEXT = "4 4\n1 2\n1 3\n2 3\n3 4"


@pytest.fixture
def paw() -> Graph:
    """Triangle on {1,2,3} with a pendant vertex 4 attached to 3."""
    return Graph.from_edges(4, [(1, 2), (1, 3), (2, 3), (3, 4)])


@pytest.fixture
def paw_text() -> str:
    return PAW_TEXT


@pytest.fixture
def ones4() -> CentralityTarget:
    return CentralityTarget.from_values([1, 1, 1, 1])


@pytest.fixture
def c2221() -> CentralityTarget:
    return CentralityTarget.from_values([2, 2, 2, 1])
