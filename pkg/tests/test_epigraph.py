import random

import pytest

from ripoly import (
    LpStatus,
    PiecewiseAffine,
    Polyhedron,
    Q,
    Subspace,
    lift,
    lift_direction,
    lift_point,
    solve,
    vertices,
)
from ripoly.epigraph import project_down
from ripoly.randgen import random_polytope, random_pwa


def qp(*vals):
    return tuple(Q(v) for v in vals)


def test_pwa_value():
    f = PiecewiseAffine(((qp(1, 0), Q(0)), (qp(-1, 0), Q(1))))
    assert f.value_at(qp(2, 5)) == Q(2)
    assert f.value_at(qp(0, 0)) == Q(1)
    assert f.dim == 2


def test_pwa_rejects_empty():
    with pytest.raises(ValueError):
        PiecewiseAffine(())


def test_lift_absolute_value():
    X = Polyhedron.box([-2], [2])
    f = PiecewiseAffine((((Q(1),), Q(0)), ((Q(-1),), Q(0))))  # |x|
    ep = lift(X, f)
    out = solve(ep.lifted, ep.objective)
    assert out.status is LpStatus.OPTIMAL
    assert out.value == Q(0)
    assert project_down(out.point) == (Q(0),)


def test_lift_constant_function():
    X = Polyhedron.box([0, 0], [1, 1])
    ep = lift(X, PiecewiseAffine(((qp(0, 0), Q(0)),)))
    out = solve(ep.lifted, ep.objective)
    assert out.value == Q(0)


def test_lift_dimension_mismatch():
    X = Polyhedron.box([0], [1])
    with pytest.raises(ValueError):
        lift(X, PiecewiseAffine(((qp(1, 0), Q(0)),)))


def test_lift_point_round_trip():
    f = PiecewiseAffine(((qp(2, 1), Q(-1)),))
    p = lift_point(qp(1, 1), f)
    assert p == qp(1, 1, 2)
    assert project_down(p) == qp(1, 1)


def test_lift_direction_adds_t_axis():
    I = Subspace.span([(Q(1), Q(0))], 2)
    L = lift_direction(I)
    assert L.ambient_dim == 3
    assert L.dim == 2
    assert L.contains_vector(qp(0, 0, 1))
    assert L.contains_vector(qp(1, 0, 0))
    assert not L.contains_vector(qp(0, 1, 0))


def test_lifted_point_feasible_iff_above_graph():
    X = Polyhedron.box([0], [4])
    f = PiecewiseAffine((((Q(1),), Q(0)),))  # f(x) = x
    ep = lift(X, f)
    from ripoly import contains

    assert contains(ep.lifted, qp(2, 2))
    assert contains(ep.lifted, qp(2, 3))
    assert not contains(ep.lifted, qp(2, 1))


@pytest.mark.parametrize("seed", range(8))
def test_lifted_optimum_equals_direct_minimum(seed):
    """min over lifted problem == min of f over generating points' hull."""
    rng = random.Random(f"epi:{seed}")
    dim = rng.choice([2, 3])
    X, pts = random_polytope(rng, dim, max_vertices=6)
    f = random_pwa(rng, dim)
    ep = lift(X, f)
    out = solve(ep.lifted, ep.objective)
    assert out.status is LpStatus.OPTIMAL
    # the reported optimum sits on the graph of f
    assert out.value == f.value_at(project_down(out.point))
    # vertex-enumeration oracle: cap t from above to make the lift bounded
    cap = max(f.value_at(v) for v in vertices(X))
    t_axis = tuple([Q(0)] * dim) + (Q(1),)
    capped = ep.lifted.with_inequalities([t_axis], [cap])
    assert out.value == min(v[-1] for v in vertices(capped))
    assert out.value <= cap
