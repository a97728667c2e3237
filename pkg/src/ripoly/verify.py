"""Named property suites checking the library's structural theorems on
seeded random instances.

Each suite draws `count` instances from a seeded PRNG and asserts exact
properties; a violation produces a self-contained reproducer document.
Suites: dominance, faces, ricap, iterations, captured, cycle, epigraph,
diffusion.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional

from . import diffusion as dif
from . import lp, randgen, serialize
from .descent import (
    DirectionSet,
    Picker,
    Schedule,
    StepRule,
    apply_round,
    dominates,
    is_interior_local_min,
    is_local_min,
    is_pre_interior_local_min,
    minimizer_set,
    p_operator,
    run,
)
from .epigraph import lift, lift_direction, lift_point, project_down
from .errors import EmptyPolyhedronError, UnknownSuiteError
from .geometry import Subspace
from .polyhedron import (
    FaceRelation,
    Polyhedron,
    RiStrategy,
    contains,
    face_polyhedron,
    face_relation,
    implicit_equalities,
    is_empty,
    poly_dim,
    relative_interior_point,
    restrict_to_affine,
    ri_membership,
    smallest_face,
    vertices,
)
from .rationals import Q, QVec, vadd, vdot, vscale, vsub


@dataclass
class SuiteResult:
    index: int
    ok: bool
    detail: str = ""
    reproducer: Optional[dict] = None


def _draw_polytope(rng: random.Random, max_dim: int = 4):
    """Random full-dimensional polytope; vertex budget shrinks with the
    dimension to keep brute-force oracles fast."""
    dim = rng.choice([2, 2, 3, 3, 4][: 2 * (max_dim - 1)])
    max_verts = {2: 12, 3: 8, 4: 6}[dim]
    return randgen.random_polytope(rng, dim, max_verts)


def _check(cond: bool, msg: str):
    if not cond:
        raise AssertionError(msg)


# ---------------------------------------------------------------------------
# suite bodies (one instance each; raise AssertionError on violation)


def _merged_directions(rng: random.Random, dim: int) -> DirectionSet:
    """A family dominating the coordinate axes: spans of groups of axes."""
    from .rationals import unit

    axes = list(range(dim))
    rng.shuffle(axes)
    cut = rng.randint(1, dim)
    groups = [axes[:cut], axes[cut:]]
    subs = []
    for g in groups:
        if g:
            subs.append(Subspace.span([unit(dim, i) for i in g], dim))
    if rng.random() < 0.3:
        subs.append(Subspace.full(dim))
    return DirectionSet(tuple(subs))


def _instance_dominance(rng: random.Random, art: dict):
    P, pts = _draw_polytope(rng)
    art["instance"] = serialize.polyhedron_to_json(P)
    dim = P.ambient_dim
    obj = randgen.random_objective(rng, dim)
    dirs = DirectionSet.coordinate_axes(dim)
    dirs_big = _merged_directions(rng, dim)
    _check(dominates(dirs_big, dirs), "merged family must dominate the axes")
    F = lp.optimal_face(P, obj)
    probes = [relative_interior_point(F), lp.solve(P, obj).point]
    probes += randgen.probe_points(P)[:4]
    for x in probes:
        if is_local_min(P, obj, x, dirs_big):
            _check(
                is_local_min(P, obj, x, dirs),
                f"dominance broken for local minimum at {x}",
            )
        if is_interior_local_min(P, obj, x, dirs_big):
            _check(
                is_interior_local_min(P, obj, x, dirs),
                f"dominance broken for interior local minimum at {x}",
            )
    # global => local: the optimal face is local everywhere, its ri interior
    x = relative_interior_point(F)
    _check(is_local_min(P, obj, x, dirs), "interior global minimum not local")
    _check(
        is_interior_local_min(P, obj, x, dirs),
        "interior global minimum not interior-local",
    )


def _instance_faces(rng: random.Random, art: dict):
    P, pts = _draw_polytope(rng, max_dim=3)
    art["instance"] = serialize.polyhedron_to_json(P)
    dim = P.ambient_dim
    obj = randgen.random_objective(rng, dim)
    dirs = DirectionSet.coordinate_axes(dim)
    probes = randgen.probe_points(P)
    F = lp.optimal_face(P, obj)
    probes.append(relative_interior_point(F))
    locals_found = [x for x in probes if is_local_min(P, obj, x, dirs)][:3]
    for x in locals_found:
        fd = smallest_face(P, x)
        Fp = face_polyhedron(P, fd.tight_set)
        samples = list(vertices(Fp))[:4] + [relative_interior_point(Fp)]
        for y in samples:
            _check(
                is_local_min(P, obj, y, dirs),
                f"point {y} of a local-minimum face is not a local minimum",
            )
    interior_found = [x for x in probes if is_interior_local_min(P, obj, x, dirs)][:3]
    for x, y in itertools.combinations(interior_found, 2):
        meet = face_polyhedron(P, smallest_face(P, x).tight_set).intersection(
            face_polyhedron(P, smallest_face(P, y).tight_set)
        )
        if is_empty(meet):
            continue
        z = relative_interior_point(meet)
        _check(
            is_interior_local_min(P, obj, z, dirs),
            f"ri point {z} of an intersection of interior-minima faces fails",
        )


def _instance_ricap(rng: random.Random, art: dict):
    X, _ = _draw_polytope(rng, max_dim=3)
    art["instance"] = {"X": serialize.polyhedron_to_json(X)}
    dim = X.ambient_dim
    Y0, _ = randgen.random_polytope(rng, dim, max_vertices=6)
    # translate Y so both relative interiors share a point
    zx = relative_interior_point(X)
    zy = relative_interior_point(Y0)
    shift = vsub(zx, zy)
    Y = Polyhedron(
        Y0.ineq_lhs,
        tuple(b + vdot(a, shift) for a, b in zip(Y0.ineq_lhs, Y0.ineq_rhs)),
        Y0.eq_lhs,
        tuple(b + vdot(a, shift) for a, b in zip(Y0.eq_lhs, Y0.eq_rhs)),
        dim,
    )
    art["instance"]["Y"] = serialize.polyhedron_to_json(Y)
    _check(ri_membership(Y, zx), "translation should put zx in ri Y")
    inter = X.intersection(Y)
    probes = randgen.probe_points(inter) + [zx] + randgen.probe_points(X, False)[:4]
    for p in probes:
        both = ri_membership(X, p) and ri_membership(Y, p)
        _check(
            both == ri_membership(inter, p),
            f"ri X ∩ ri Y mismatch with ri(X∩Y) at {p}",
        )


def _instance_iterations(rng: random.Random, art: dict):
    P, _ = _draw_polytope(rng, max_dim=3)
    art["instance"] = serialize.polyhedron_to_json(P)
    dim = P.ambient_dim
    obj = randgen.random_objective(rng, dim)
    dirs = randgen.random_direction_set(rng, dim)
    sched = Schedule.cyclic(len(dirs.directions))
    F = lp.optimal_face(P, obj)
    x = relative_interior_point(F)
    _check(is_interior_local_min(P, obj, x, dirs), "start not interior-local")
    f0 = obj.value_at(x)
    for _ in range(2):
        for idx in reversed(sched.order):
            M = minimizer_set(P, obj, x, dirs.directions[idx])
            x_next = relative_interior_point(M)
            _check(obj.value_at(x_next) == f0, "objective moved at interior minimum")
            _check(
                face_relation(P, x_next, x) is FaceRelation.EQUAL_FACE,
                "step left the relative interior of the current face",
            )
            _check(
                is_interior_local_min(P, obj, x_next, dirs),
                "interior-minimum status lost along the run",
            )
            x = x_next
    # constant-objective chains: from a pre-interior start, smallest faces
    # grow monotonically and an interior minimum appears within d+1 rounds
    starts = [
        p
        for p in randgen.probe_points(P)
        if is_pre_interior_local_min(P, obj, p, dirs, sched)
    ][:2]
    d = poly_dim(P)
    for x in starts:
        fx = obj.value_at(x)
        tight = smallest_face(P, x).tight_set
        hit_interior = is_interior_local_min(P, obj, x, dirs)
        for _ in range(d + 1):
            x = apply_round(P, obj, x, dirs, sched)
            _check(obj.value_at(x) == fx, "objective moved from pre-interior start")
            t2 = smallest_face(P, x).tight_set
            _check(t2 <= tight, "smallest faces did not form a growing chain")
            tight = t2
            hit_interior = hit_interior or is_interior_local_min(P, obj, x, dirs)
        _check(hit_interior, "no interior minimum within d+1 rounds")


def _instance_captured(rng: random.Random, art: dict):
    P, _ = _draw_polytope(rng, max_dim=3)
    art["instance"] = serialize.polyhedron_to_json(P)
    dim = P.ambient_dim
    obj = randgen.random_objective(rng, dim)
    dirs = DirectionSet.coordinate_axes(dim)
    sched = Schedule.cyclic(dim)
    probes = randgen.probe_points(P)
    pres = [
        x
        for x in probes
        if is_pre_interior_local_min(P, obj, x, dirs, sched)
    ][:2]
    F = lp.optimal_face(P, obj)
    pres.append(relative_interior_point(F))
    for x in pres:
        y = p_operator(P, obj, x, dirs, sched)
        _check(
            is_interior_local_min(P, obj, y, dirs),
            "p(x) not an interior local minimum at a pre-interior start",
        )
        cert = face_polyhedron(P, smallest_face(P, y).tight_set)
        _check(contains(cert, x), "start escaped the certifying face")
        fx = obj.value_at(x)
        for picker in (Picker.LEX_MIN_VERTEX, Picker.STAY_PUT):
            tr = run(
                P, obj, x, dirs, sched,
                StepRule.plain(picker),
                max_rounds=3,
                f_stall_rounds=10 * dim,
                classify_final=False,
            )
            for rec in tr.records:
                _check(rec.objective_after == fx, "objective moved from pre-interior")
                _check(
                    contains(cert, rec.point_after),
                    "plain iteration left the certifying face",
                )


def _enumerate_faces_2d(P: Polyhedron):
    """All nonempty faces of a 2-D polytope as canonical tight sets."""
    verts = vertices(P)
    descs = {smallest_face(P, v).tight_set for v in verts}
    for a, b in itertools.combinations(verts, 2):
        mid = vscale(Q(1, 2), vadd(a, b))
        if contains(P, mid):
            fd = smallest_face(P, mid)
            if fd.dim == 1:
                descs.add(fd.tight_set)
    descs.add(smallest_face(P, relative_interior_point(P)).tight_set)
    return descs


def _instance_cycle(rng: random.Random, art: dict):
    P, _ = randgen.random_polytope(rng, 2, max_vertices=8)
    art["instance"] = serialize.polyhedron_to_json(P)
    obj = randgen.random_objective(rng, 2)
    dirs = randgen.random_direction_set(rng, 2)
    sched = Schedule.cyclic(len(dirs.directions))
    faces = _enumerate_faces_2d(P)
    ilm_face_polys = []
    for tight in faces:
        Fp = face_polyhedron(P, tight)
        z = relative_interior_point(Fp)
        if is_interior_local_min(P, obj, z, dirs):
            ilm_face_polys.append(Fp)
    probes = randgen.probe_points(P)
    for tight in faces:
        probes.append(relative_interior_point(face_polyhedron(P, tight)))
    for x in probes:
        definitional = any(contains(Fp, x) for Fp in ilm_face_polys)
        computed = is_pre_interior_local_min(P, obj, x, dirs, sched)
        _check(
            definitional == computed,
            f"pre-interior test disagrees with the definition at {x}",
        )


def _pwa_minimizer_set(R: Polyhedron, f, value) -> Polyhedron:
    """{y in R : f(y) = value} as an H-rep (all pieces <= value)."""
    lhs = [g for g, _ in f.pieces]
    rhs = [value - h for _, h in f.pieces]
    return R.with_inequalities(lhs, rhs)


def _instance_epigraph(rng: random.Random, art: dict):
    X, _ = _draw_polytope(rng, max_dim=3)
    dim = X.ambient_dim
    f = randgen.random_pwa(rng, dim)
    art["instance"] = {
        "X": serialize.polyhedron_to_json(X),
        "f": serialize.pwa_to_json(f),
    }
    ep = lift(X, f)
    # Eq. set equality at the global level, by vertex enumeration
    out = lp.solve(ep.lifted, ep.objective)
    tstar = out.value
    Mlift = lp.optimal_face(ep.lifted, ep.objective)
    Mdirect = _pwa_minimizer_set(X, f, tstar)
    vl = {v for v in vertices(Mlift)}
    vd = {lift_point(v, f) for v in vertices(Mdirect)}
    _check(vl == vd, "lifted/direct global minimizer sets differ")
    # Lemma on restrictions, both plain and ri memberships
    I = randgen.random_subspace(rng, dim, max_dim=dim - 1)
    x = rng.choice(randgen.probe_points(X))
    xbar = lift_point(x, f)
    R = restrict_to_affine(X, x, I)
    sub = lift(R, f)
    vI = lp.solve(sub.lifted, sub.objective).value
    Msub = _pwa_minimizer_set(R, f, vI)
    Mbar = minimizer_set(ep.lifted, ep.objective, xbar, lift_direction(I))
    probes = randgen.probe_points(Msub) + randgen.probe_points(R, False)[:4]
    for y in probes:
        lhs_in = contains(Msub, y)
        rhs_in = contains(Mbar, lift_point(y, f))
        _check(lhs_in == rhs_in, f"membership transfer fails at {y}")
        if lhs_in:
            lhs_ri = ri_membership(Msub, y)
            rhs_ri = ri_membership(Mbar, lift_point(y, f))
            _check(lhs_ri == rhs_ri, f"ri transfer fails at {y}")
    # classification transfer at x
    dirs = DirectionSet.coordinate_axes(dim)
    lifted_dirs = DirectionSet(tuple(lift_direction(S) for S in dirs.directions))
    direct_local = True
    direct_interior = True
    for S in dirs.directions:
        RS = restrict_to_affine(X, x, S)
        subS = lift(RS, f)
        vS = lp.solve(subS.lifted, subS.objective).value
        if f.value_at(x) != vS:
            direct_local = False
            direct_interior = False
            break
        if not ri_membership(_pwa_minimizer_set(RS, f, vS), x):
            direct_interior = False
    _check(
        direct_local == is_local_min(ep.lifted, ep.objective, xbar, lifted_dirs),
        "local-minimum classification does not transfer",
    )
    if direct_local:
        _check(
            direct_interior
            == is_interior_local_min(ep.lifted, ep.objective, xbar, lifted_dirs),
            "interior classification does not transfer",
        )


def _instance_diffusion(rng: random.Random, art: dict, sweeps: int = 2):
    m = randgen.random_model(rng)
    art["instance"] = serialize.model_to_json(m)
    phi = dif.zero_phi(m)
    primal = dif.primal_min(m)
    for _ in range(sweeps):
        for pivot in dif.all_pivots(m):
            before = dif.dual_bound(m, phi)
            _check(before <= primal, "dual bound exceeds the primal minimum")
            _check(
                dif.verify_ri_property(m, phi, pivot),
                f"diffusion step not in relative interior at pivot {pivot}",
            )
            phi = dif.diffusion_step(m, phi, pivot)
            _check(
                dif.dual_bound(m, phi) >= before,
                f"dual bound decreased at pivot {pivot}",
            )


_SUITES: Dict[str, Callable] = {
    "dominance": _instance_dominance,
    "faces": _instance_faces,
    "ricap": _instance_ricap,
    "iterations": _instance_iterations,
    "captured": _instance_captured,
    "cycle": _instance_cycle,
    "epigraph": _instance_epigraph,
    "diffusion": _instance_diffusion,
}

SUITE_NAMES = tuple(sorted(_SUITES))


def run_suite(name: str, seed: int, count: int) -> List[SuiteResult]:
    if name not in _SUITES:
        raise UnknownSuiteError(f"unknown suite {name!r}; known: {SUITE_NAMES}")
    body = _SUITES[name]
    results = []
    for i in range(count):
        rng = random.Random(f"{name}:{seed}:{i}")
        art: dict = {}
        try:
            body(rng, art)
            results.append(SuiteResult(i, True))
        except AssertionError as exc:
            repro = {
                "suite": name,
                "seed": seed,
                "index": i,
                "prng": randgen.PRNG_ID,
                "error": str(exc),
                "instance": art.get("instance"),
            }
            results.append(SuiteResult(i, False, str(exc), repro))
    return results
