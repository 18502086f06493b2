import pytest
from eliot import MemoryLogger
from eliot.testing import check_for_errors, swap_logger

from ribbonkirby.cli_io.pdtext import parse_pd_text
from ribbonkirby.construct import torus_2n

TREFOIL_PD = """\
# right-handed trefoil
component K role=plain edges=1,2,3,4,5,6
X 1 5 2 4 +
X 3 1 4 6 +
X 5 3 6 2 +
marker exterior 1 right
"""


@pytest.fixture(autouse=True)
def logger():
    test_logger = MemoryLogger()
    swap_logger(test_logger)
    yield test_logger
    check_for_errors(test_logger)


@pytest.fixture
def trefoil():
    return parse_pd_text(TREFOIL_PD)


@pytest.fixture
def cinquefoil():
    return torus_2n(5)
