import pytest

from ripoly import (
    DirectionSet,
    LinearObjective,
    Picker,
    PointNotInPolyhedronError,
    Polyhedron,
    Q,
    Rule,
    Schedule,
    StepRule,
    Subspace,
    UnboundedDirectionError,
    classify,
    contains,
    distance_to_union,
    dominates,
    is_interior_local_min,
    is_local_min,
    is_pre_interior_local_min,
    minimizer_set,
    p_operator,
    ri_membership,
    run,
    vertices,
)
from ripoly.descent import apply_round, level_set_bounded, step_plain, step_ri


def qp(*vals):
    return tuple(Q(v) for v in vals)


def test_minimizer_set_vertical(quad, quad_obj):
    # f is constant along e2, so the whole vertical restriction is optimal
    I = Subspace.span([(Q(0), Q(1))], 2)
    M = minimizer_set(quad, quad_obj, qp(1, 3), I)
    assert vertices(M) == (qp(1, 0), qp(1, 3))


def test_minimizer_set_horizontal(quad, quad_obj):
    I = Subspace.span([(Q(1), Q(0))], 2)
    M = minimizer_set(quad, quad_obj, qp(1, 0), I)
    assert vertices(M) == (qp(3, 0),)


def test_minimizer_set_unbounded_direction():
    P = Polyhedron.make([((0, -1), 0)], [], 2)  # x2 >= 0
    with pytest.raises(UnboundedDirectionError):
        minimizer_set(P, LinearObjective(qp(1, 0)), qp(0, 0),
                      Subspace.span([(Q(1), Q(0))], 2))


def test_step_ri_lands_in_ri(quad, quad_obj):
    I = Subspace.span([(Q(0), Q(1))], 2)
    y = step_ri(quad, quad_obj, qp(1, 3), I)
    M = minimizer_set(quad, quad_obj, qp(1, 3), I)
    assert ri_membership(M, y)


def test_step_plain_pickers(quad, quad_obj):
    I = Subspace.span([(Q(0), Q(1))], 2)
    assert step_plain(quad, quad_obj, qp(1, 3), I) == qp(1, 0)  # lex-min vertex
    assert step_plain(quad, quad_obj, qp(1, 3), I, Picker.STAY_PUT) == qp(1, 3)


def test_schedule_validation(axes2):
    with pytest.raises(ValueError):
        Schedule((0,)).validate(axes2)
    Schedule((0, 1, 0)).validate(axes2)


def test_classification_probes(quad, quad_obj, axes2):
    expected = {
        qp(0, 4): (True, True, True),
        qp(3, 0): (True, False, True),
        qp(3, 1): (True, False, True),
        (Q(3), Q(1, 2)): (True, True, True),
        qp(1, 3): (True, False, False),
        (Q(2), Q(1, 2)): (False, False, False),
    }
    for x, (loc, ilm, pre) in expected.items():
        c = classify(quad, quad_obj, x, axes2)
        assert (c.is_local, c.is_interior_local, c.is_pre_interior_local) == (loc, ilm, pre), x


def test_classifier_helpers_agree(quad, quad_obj, axes2, sched2):
    for x in [qp(0, 4), qp(3, 0), qp(1, 3), qp(2, 1)]:
        c = classify(quad, quad_obj, x, axes2, sched2)
        assert c.is_local == is_local_min(quad, quad_obj, x, axes2)
        assert c.is_interior_local == is_interior_local_min(quad, quad_obj, x, axes2)
        assert c.is_pre_interior_local == is_pre_interior_local_min(
            quad, quad_obj, x, axes2, sched2
        )


def test_p_operator_certifies(quad, quad_obj, axes2, sched2):
    y = p_operator(quad, quad_obj, qp(3, 0), axes2, sched2)
    assert is_interior_local_min(quad, quad_obj, y, axes2)
    assert quad_obj.value_at(y) == Q(-3)


def test_dominance():
    axes = DirectionSet.coordinate_axes(2)
    full = DirectionSet((Subspace.full(2),))
    assert dominates(full, axes)
    assert not dominates(axes, full)
    assert dominates(axes, axes)


def test_run_ri_escapes(quad, quad_obj, axes2, sched2):
    tr = run(quad, quad_obj, qp(1, 3), axes2, sched2, StepRule.ri())
    assert tr.stalled and tr.certified_interior
    assert quad_obj.value_at(tr.final_point) == Q(-3)
    assert tr.classification.is_interior_local


def test_run_stay_put_stalls(quad, quad_obj, axes2, sched2):
    tr = run(
        quad, quad_obj, qp(1, 3), axes2, sched2,
        StepRule.plain(Picker.STAY_PUT), max_rounds=20, classify_final=False,
    )
    assert all(r.point_after == qp(1, 3) for r in tr.records)
    assert quad_obj.value_at(tr.final_point) == Q(-1)


def test_run_rejects_outside_start(quad, quad_obj, axes2, sched2):
    with pytest.raises(PointNotInPolyhedronError):
        run(quad, quad_obj, qp(9, 9), axes2, sched2, StepRule.ri())


def test_apply_round_right_to_left(quad, quad_obj, axes2):
    # schedule (0, 1) applies direction 1 first, then 0
    x = apply_round(quad, quad_obj, qp(1, 3), axes2, Schedule((0, 1)))
    # step along e2 first keeps f = -1, then e1 improves it
    assert quad_obj.value_at(x) < Q(-1)


def test_level_set_bounded(quad, quad_obj):
    assert level_set_bounded(quad, quad_obj, qp(1, 3))
    ray = Polyhedron.make([((0, -1), 0)], [], 2)
    assert not level_set_bounded(ray, LinearObjective(qp(0, 1)), qp(0, 1))


def test_distance_to_union(quad):
    pt = Polyhedron.make([], [((1, 0), 0), ((0, 1), 4)], 2)  # {(0,4)}
    seg = Polyhedron.make(
        [((0, 1), 1), ((0, -1), 0)], [((1, 0), 3)], 2
    )  # [(3,0),(3,1)]
    assert distance_to_union([pt, seg], qp(0, 4)) == 0.0
    assert distance_to_union([pt, seg], qp(2, 0)) == 1.0
    d = distance_to_union([pt, seg], qp(2, 2))
    assert abs(d - 2 ** 0.5) < 1e-12
