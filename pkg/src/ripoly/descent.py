"""Block-coordinate minimization over a polyhedron.

Implements both update rules: pick any block minimizer ("plain"), or pick a
point from the relative interior of the block-minimizer set ("ri"). The
round operator composes one step per schedule entry right-to-left; its
(d+1)-fold composition decides interior / pre-interior status in finite
time via exact objective comparison.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import List, Optional, Sequence, Tuple

from . import linalg, lp
from .errors import UnboundedDirectionError
from .geometry import Subspace
from .polyhedron import (
    Polyhedron,
    RiStrategy,
    contains,
    poly_dim,
    relative_interior_point,
    restrict_to_affine,
    ri_membership,
    vertices,
)
from .rationals import Q, QVec, vadd, vdot, vscale, vsub


@dataclass(frozen=True)
class DirectionSet:
    """The finite family of search-direction subspaces."""

    directions: Tuple[Subspace, ...]

    def __post_init__(self):
        if not self.directions:
            raise ValueError("direction set must be nonempty")
        dims = {s.ambient_dim for s in self.directions}
        if len(dims) != 1:
            raise ValueError("directions must share an ambient dimension")

    @property
    def ambient_dim(self) -> int:
        return self.directions[0].ambient_dim

    @staticmethod
    def coordinate_axes(n: int) -> "DirectionSet":
        from .rationals import unit

        return DirectionSet(
            tuple(Subspace((unit(n, i),), n) for i in range(n))
        )


@dataclass(frozen=True)
class Schedule:
    """Order in which directions are visited within one round; every
    direction index must appear at least once."""

    order: Tuple[int, ...]

    def validate(self, dirs: DirectionSet):
        if set(self.order) != set(range(len(dirs.directions))):
            raise ValueError("schedule must visit every direction at least once")

    @staticmethod
    def cyclic(n_directions: int) -> "Schedule":
        return Schedule(tuple(range(n_directions)))


class Picker(Enum):
    LEX_MIN_VERTEX = "lex_min_vertex"
    STAY_PUT = "stay_put"  # keeps the current point whenever it is optimal


class Rule(Enum):
    PLAIN = "plain"
    RI = "ri"


@dataclass(frozen=True)
class IterationRecord:
    step_index: int
    direction_index: int
    point_before: QVec
    point_after: QVec
    objective_after: object
    minimizer_face_dim: int
    was_ri_selection: bool


@dataclass(frozen=True)
class Classification:
    is_local: bool
    is_interior_local: bool
    is_pre_interior_local: bool
    witness: Optional[str] = None


@dataclass
class Trace:
    records: List[IterationRecord]
    final_point: QVec
    rounds_completed: int
    stalled: bool  # objective unchanged for the required number of rounds
    certified_interior: bool  # stall under the RI rule certifies this
    classification: Optional[Classification] = None


# ---------------------------------------------------------------------------


def minimizer_set(P: Polyhedron, obj: lp.LinearObjective, x: QVec, I: Subspace) -> Polyhedron:
    """M(P ∩ (x+I), f): the optimal face of the restriction."""
    R = restrict_to_affine(P, x, I)
    out = lp.solve(R, obj)
    if out.status == lp.LpStatus.UNBOUNDED:
        raise UnboundedDirectionError("objective unbounded below along direction")
    assert out.status == lp.LpStatus.OPTIMAL  # x itself is feasible
    return R.with_equalities([obj.c], [out.value])


def step_plain(
    P: Polyhedron,
    obj: lp.LinearObjective,
    x: QVec,
    I: Subspace,
    picker: Picker = Picker.LEX_MIN_VERTEX,
) -> QVec:
    M = minimizer_set(P, obj, x, I)
    if picker is Picker.STAY_PUT and contains(M, x):
        return x
    verts = vertices(M)
    return min(verts)


def step_ri(
    P: Polyhedron,
    obj: lp.LinearObjective,
    x: QVec,
    I: Subspace,
    strategy: RiStrategy = RiStrategy.SLACK_AVERAGE,
) -> QVec:
    M = minimizer_set(P, obj, x, I)
    return relative_interior_point(M, strategy)


def apply_round(
    P: Polyhedron,
    obj: lp.LinearObjective,
    x: QVec,
    dirs: DirectionSet,
    sched: Schedule,
    strategy: RiStrategy = RiStrategy.SLACK_AVERAGE,
) -> QVec:
    """One round p_sigma: steps composed right-to-left over the schedule."""
    sched.validate(dirs)
    for idx in reversed(sched.order):
        x = step_ri(P, obj, x, dirs.directions[idx], strategy)
    return x


def p_operator(
    P: Polyhedron,
    obj: lp.LinearObjective,
    x: QVec,
    dirs: DirectionSet,
    sched: Schedule,
    strategy: RiStrategy = RiStrategy.SLACK_AVERAGE,
) -> QVec:
    """p = p_sigma^(d+1) with d the affine dimension of P."""
    d = poly_dim(P)
    for _ in range(d + 1):
        x = apply_round(P, obj, x, dirs, sched, strategy)
    return x


# ---------------------------------------------------------------------------
# classifiers


def is_local_min(P: Polyhedron, obj: lp.LinearObjective, x: QVec, dirs: DirectionSet) -> bool:
    fx = obj.value_at(x)
    for I in dirs.directions:
        R = restrict_to_affine(P, x, I)
        out = lp.solve(R, obj)
        if out.status == lp.LpStatus.UNBOUNDED:
            raise UnboundedDirectionError("objective unbounded below along direction")
        if out.value != fx:
            return False
    return True


def is_interior_local_min(
    P: Polyhedron, obj: lp.LinearObjective, x: QVec, dirs: DirectionSet
) -> bool:
    for I in dirs.directions:
        M = minimizer_set(P, obj, x, I)
        if not ri_membership(M, x):
            return False
    return True


def is_pre_interior_local_min(
    P: Polyhedron,
    obj: lp.LinearObjective,
    x: QVec,
    dirs: DirectionSet,
    sched: Schedule,
    strategy: RiStrategy = RiStrategy.SLACK_AVERAGE,
) -> bool:
    """Exact finite test: f(p(x)) = f(x).

    Objective equality after d+1 rounds certifies a pre-interior point, and
    pre-interior points keep the objective constant under any conforming
    iteration, so the test decides the property both ways."""
    y = p_operator(P, obj, x, dirs, sched, strategy)
    return obj.value_at(y) == obj.value_at(x)


def classify(
    P: Polyhedron,
    obj: lp.LinearObjective,
    x: QVec,
    dirs: DirectionSet,
    sched: Optional[Schedule] = None,
    strategy: RiStrategy = RiStrategy.SLACK_AVERAGE,
) -> Classification:
    if sched is None:
        sched = Schedule.cyclic(len(dirs.directions))
    local = True
    witness = None
    fx = obj.value_at(x)
    for i, I in enumerate(dirs.directions):
        R = restrict_to_affine(P, x, I)
        out = lp.solve(R, obj)
        if out.status == lp.LpStatus.UNBOUNDED:
            raise UnboundedDirectionError("objective unbounded below along direction")
        if out.value != fx:
            local = False
            witness = f"objective improves along direction {i}"
            break
    interior = local and is_interior_local_min(P, obj, x, dirs)
    if local and not interior:
        for i, I in enumerate(dirs.directions):
            if not ri_membership(minimizer_set(P, obj, x, I), x):
                witness = f"not in relative interior of minimizer set of direction {i}"
                break
    if interior:
        pre = True
        witness = "interior local minimum"
    elif not local:
        pre = False  # every pre-interior point is a local minimum
    else:
        y = p_operator(P, obj, x, dirs, sched, strategy)
        pre = obj.value_at(y) == fx
        if pre:
            witness = f"certifying interior local minimum at {tuple(map(str, y))}"
    return Classification(local, interior, pre, witness)


def dominates(dirs_a: DirectionSet, dirs_b: DirectionSet) -> bool:
    """dirs_a dominates dirs_b: every subspace of dirs_b is contained in
    some subspace of dirs_a."""
    if dirs_a.ambient_dim != dirs_b.ambient_dim:
        raise ValueError("ambient dimension mismatch")
    for I in dirs_b.directions:
        if not any(J.contains_subspace(I) for J in dirs_a.directions):
            return False
    return True


# ---------------------------------------------------------------------------
# driver


@dataclass(frozen=True)
class StepRule:
    rule: Rule
    picker: Picker = Picker.LEX_MIN_VERTEX
    strategy: RiStrategy = RiStrategy.SLACK_AVERAGE

    @staticmethod
    def ri(strategy: RiStrategy = RiStrategy.SLACK_AVERAGE) -> "StepRule":
        return StepRule(Rule.RI, strategy=strategy)

    @staticmethod
    def plain(picker: Picker = Picker.LEX_MIN_VERTEX) -> "StepRule":
        return StepRule(Rule.PLAIN, picker=picker)


def run(
    P: Polyhedron,
    obj: lp.LinearObjective,
    x0: QVec,
    dirs: DirectionSet,
    sched: Schedule,
    rule: StepRule,
    max_rounds: int = 100,
    f_stall_rounds: Optional[int] = None,
    classify_final: bool = True,
) -> Trace:
    """Run descent rounds until the objective stalls for f_stall_rounds
    consecutive rounds (default d+1) or max_rounds is reached."""
    sched.validate(dirs)
    if not contains(P, x0):
        from .errors import PointNotInPolyhedronError

        raise PointNotInPolyhedronError("start point not in polyhedron")
    d = poly_dim(P)
    stall_needed = f_stall_rounds if f_stall_rounds is not None else d + 1
    stall_needed = max(stall_needed, d + 1)
    records: List[IterationRecord] = []
    x = x0
    step_index = 0
    stall = 0
    rounds_done = 0
    stalled = False
    for _ in range(max_rounds):
        f_before = obj.value_at(x)
        for idx in reversed(sched.order):
            I = dirs.directions[idx]
            M = minimizer_set(P, obj, x, I)
            if rule.rule is Rule.RI:
                x_next = relative_interior_point(M, rule.strategy)
            else:
                if rule.picker is Picker.STAY_PUT and contains(M, x):
                    x_next = x
                else:
                    x_next = min(vertices(M))
            records.append(
                IterationRecord(
                    step_index=step_index,
                    direction_index=idx,
                    point_before=x,
                    point_after=x_next,
                    objective_after=obj.value_at(x_next),
                    minimizer_face_dim=poly_dim(M),
                    was_ri_selection=rule.rule is Rule.RI,
                )
            )
            x = x_next
            step_index += 1
        rounds_done += 1
        if obj.value_at(x) == f_before:
            stall += 1
        else:
            stall = 0
        if stall >= stall_needed:
            stalled = True
            break
    certified = stalled and rule.rule is Rule.RI
    trace = Trace(
        records=records,
        final_point=x,
        rounds_completed=rounds_done,
        stalled=stalled,
        certified_interior=certified,
    )
    if classify_final:
        trace.classification = classify(P, obj, x, dirs, sched, rule.strategy)
    return trace


def level_set_bounded(P: Polyhedron, obj: lp.LinearObjective, x: QVec) -> bool:
    """Preflight: is X ∩ {y : f(y) <= f(x)} bounded? Sufficient for all
    descent sequences from x to stay bounded."""
    from .polyhedron import is_bounded

    level = P.with_inequalities([obj.c], [obj.value_at(x)])
    return is_bounded(level)


# ---------------------------------------------------------------------------
# distance reporting (floats allowed here only)


def _squared_distance_to_polyhedron(T: Polyhedron, x: QVec):
    """Exact squared Euclidean distance from x to a nonempty polyhedron,
    by projecting onto the affine hull of every candidate tight set."""
    import itertools as it

    if contains(T, x):
        return Q(0)
    m = len(T.ineq_lhs)
    if m > 14:
        raise ValueError("distance enumeration limited to <= 14 inequality rows")
    best = None
    for r in range(m + 1):
        for combo in it.combinations(range(m), r):
            lhs = list(T.eq_lhs) + [T.ineq_lhs[i] for i in combo]
            rhs = list(T.eq_rhs) + [T.ineq_rhs[i] for i in combo]
            if lhs:
                sol = linalg.solve_affine(lhs, rhs, T.ambient_dim)
                if sol is None:
                    continue
                x0, bas = sol
            else:
                x0, bas = x, []
            if bas:
                rvec = vsub(x, x0)
                gram = [tuple(vdot(a, b) for b in bas) for a in bas]
                target = [vdot(a, rvec) for a in bas]
                lam = linalg.solve_unique(gram, target, len(bas))
                p = x0
                for t, bv in zip(lam, bas):
                    p = vadd(p, vscale(t, bv))
            else:
                p = x0
            if not contains(T, p):
                continue
            diff = vsub(x, p)
            sq = vdot(diff, diff)
            if best is None or sq < best:
                best = sq
    return best


def distance_to_union(targets: Sequence[Polyhedron], x: QVec) -> float:
    """Euclidean distance from x to the union of target polyhedra; exact
    squared distances internally, reported as a float."""
    if not targets:
        raise ValueError("targets must be nonempty")
    best = None
    for T in targets:
        sq = _squared_distance_to_polyhedron(T, x)
        if sq is not None and (best is None or sq < best):
            best = sq
    if best is None:
        return math.inf
    return math.sqrt(float(best))
