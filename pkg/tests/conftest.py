import pytest

from ripoly import DirectionSet, LinearObjective, Polyhedron, Q, Schedule


@pytest.fixture
def quad():
    """conv{(1,0),(3,0),(3,1),(0,4)}: the running 2-D example.

    Rows: -x2 <= 0, x1 <= 3, x1 + x2 <= 4, -4x1 - x2 <= -4.
    """
    return Polyhedron.make(
        [
            ((0, -1), 0),
            ((1, 0), 3),
            ((1, 1), 4),
            ((-4, -1), -4),
        ],
        [],
        2,
    )


@pytest.fixture
def quad_obj():
    return LinearObjective((Q(-1), Q(0)))


@pytest.fixture
def axes2():
    return DirectionSet.coordinate_axes(2)


@pytest.fixture
def sched2():
    return Schedule.cyclic(2)
