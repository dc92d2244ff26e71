import pytest

from greedycover.instance import parse_instance

# Worked micro-instance: greedy takes rows 0,1,2 but rows {1,2} already cover.
THREE_BY_SIX = "3 6\n111100\n110010\n001101\n"

IDENTITY3 = "3 3\n100\n010\n001\n"


@pytest.fixture
def three_by_six():
    return parse_instance(THREE_BY_SIX)


@pytest.fixture
def identity3():
    return parse_instance(IDENTITY3)
