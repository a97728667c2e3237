import random

import pytest

from ripoly import (
    LinearObjective,
    LpStatus,
    NotOptimalError,
    Polyhedron,
    Q,
    contains,
    optimal_face,
    poly_dim,
    solve,
    vertices,
)
from ripoly.randgen import random_objective, random_polytope
from ripoly.rationals import vdot


def qp(*vals):
    return tuple(Q(v) for v in vals)


def test_solve_quad(quad, quad_obj):
    out = solve(quad, quad_obj)
    assert out.status is LpStatus.OPTIMAL
    assert out.value == Q(-3)
    assert contains(quad, out.point)
    assert vdot(quad_obj.c, out.point) == Q(-3)


def test_solve_infeasible():
    P = Polyhedron.make([((1,), 0), ((-1,), -1)], [], 1)
    assert solve(P, LinearObjective((Q(1),))).status is LpStatus.INFEASIBLE


def test_solve_unbounded():
    P = Polyhedron.make([((-1,), 0)], [], 1)  # x >= 0
    assert solve(P, LinearObjective((Q(-1),))).status is LpStatus.UNBOUNDED
    assert solve(P, LinearObjective((Q(1),))).status is LpStatus.OPTIMAL


def test_solve_with_equalities():
    P = Polyhedron.make(
        [((1, 0, 0), 5), ((-1, 0, 0), 5)], [((1, 1, 1), 3), ((0, 1, -1), 1)], 3
    )
    out = solve(P, LinearObjective(qp(1, 0, 0)))
    assert out.status is LpStatus.OPTIMAL
    assert out.value == Q(-5)
    assert contains(P, out.point)


def test_solve_zero_dim_feasible():
    # equalities pin the unique point
    P = Polyhedron.make([], [((1, 0), 2), ((0, 1), 1)], 2)
    out = solve(P, LinearObjective(qp(3, 3)))
    assert out.point == qp(2, 1)
    assert out.value == Q(9)


def test_optimal_face_quad(quad, quad_obj):
    F = optimal_face(quad, quad_obj)
    assert poly_dim(F) == 1
    assert vertices(F) == (qp(3, 0), qp(3, 1))


def test_optimal_face_rejects_unbounded():
    P = Polyhedron.make([((-1,), 0)], [], 1)
    with pytest.raises(NotOptimalError):
        optimal_face(P, LinearObjective((Q(-1),)))


def test_exact_fractional_optimum():
    # min x1 + x2 over x1/3 + x2 >= 1, x1 >= 0, x2 >= 0
    P = Polyhedron.make(
        [((Q(-1, 3), Q(-1)), -1), ((-1, 0), 0), ((0, -1), 0)], [], 2
    )
    out = solve(P, LinearObjective(qp(1, 1)))
    assert out.value == Q(1)


@pytest.mark.parametrize("seed", range(12))
def test_simplex_matches_hull_minimum(seed):
    """Optimum over a polytope equals the best generating point."""
    rng = random.Random(seed)
    dim = rng.choice([2, 3, 4])
    P, pts = random_polytope(rng, dim, max_vertices=7)
    obj = random_objective(rng, dim)
    out = solve(P, obj)
    assert out.status is LpStatus.OPTIMAL
    assert out.value == min(vdot(obj.c, p) for p in pts)


@pytest.mark.parametrize("seed", range(6))
def test_solution_lies_on_reported_value(seed):
    rng = random.Random(f"pt:{seed}")
    P, _ = random_polytope(rng, 3, max_vertices=6)
    obj = random_objective(rng, 3)
    out = solve(P, obj)
    assert contains(P, out.point)
    assert vdot(obj.c, out.point) == out.value
