"""JSON schemas for polyhedra, instances, traces and models.

Rationals serialize as strings "p/q" (or "p" when the denominator is 1).
All documents carry "schema": 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Tuple

from .descent import (
    Classification,
    DirectionSet,
    IterationRecord,
    Picker,
    Rule,
    Schedule,
    StepRule,
    Trace,
)
from .diffusion import PairwiseModel
from .epigraph import PiecewiseAffine
from .geometry import Subspace
from .lp import LinearObjective
from .polyhedron import Polyhedron, RiStrategy
from .rationals import Q, QVec, rat_from_str, rat_to_str, vec_from_strs, vec_to_strs

SCHEMA_VERSION = 1


def polyhedron_to_json(P: Polyhedron) -> dict:
    return {
        "dim": P.ambient_dim,
        "ineq": [
            {"a": vec_to_strs(a), "b": rat_to_str(b)}
            for a, b in zip(P.ineq_lhs, P.ineq_rhs)
        ],
        "eq": [
            {"a": vec_to_strs(a), "b": rat_to_str(b)}
            for a, b in zip(P.eq_lhs, P.eq_rhs)
        ],
    }


def polyhedron_from_json(doc: dict) -> Polyhedron:
    dim = int(doc["dim"])
    ineqs = [(vec_from_strs(r["a"]), rat_from_str(r["b"])) for r in doc.get("ineq", [])]
    eqs = [(vec_from_strs(r["a"]), rat_from_str(r["b"])) for r in doc.get("eq", [])]
    return Polyhedron.make(ineqs, eqs, dim)


def directions_to_json(dirs: DirectionSet) -> list:
    return [[vec_to_strs(v) for v in S.basis] for S in dirs.directions]


def directions_from_json(doc: list, dim: int) -> DirectionSet:
    subs = []
    for basis in doc:
        vecs = [vec_from_strs(v) for v in basis]
        subs.append(Subspace.span(vecs, dim))
    return DirectionSet(tuple(subs))


@dataclass(frozen=True)
class Instance:
    polyhedron: Polyhedron
    objective: LinearObjective
    directions: DirectionSet
    schedule: Schedule
    start: QVec
    rule: StepRule
    max_rounds: int


def instance_to_json(inst: Instance) -> dict:
    return {
        "schema": SCHEMA_VERSION,
        "polyhedron": polyhedron_to_json(inst.polyhedron),
        "objective": vec_to_strs(inst.objective.c),
        "directions": directions_to_json(inst.directions),
        "schedule": list(inst.schedule.order),
        "start": vec_to_strs(inst.start),
        "rule": inst.rule.rule.value,
        "picker": inst.rule.picker.value,
        "strategy": inst.rule.strategy.value,
        "max_rounds": inst.max_rounds,
    }


def instance_from_json(doc: dict) -> Instance:
    P = polyhedron_from_json(doc["polyhedron"])
    obj = LinearObjective(vec_from_strs(doc["objective"]))
    dirs = directions_from_json(doc["directions"], P.ambient_dim)
    sched = Schedule(tuple(int(i) for i in doc["schedule"]))
    start = vec_from_strs(doc["start"])
    rule_kind = Rule(doc.get("rule", "ri"))
    picker = Picker(doc.get("picker", "lex_min_vertex"))
    strategy = RiStrategy(doc.get("strategy", "slack_average"))
    rule = StepRule(rule_kind, picker=picker, strategy=strategy)
    return Instance(P, obj, dirs, sched, start, rule, int(doc.get("max_rounds", 100)))


def record_to_json(r: IterationRecord) -> dict:
    return {
        "step_index": r.step_index,
        "direction_index": r.direction_index,
        "point_before": vec_to_strs(r.point_before),
        "point_after": vec_to_strs(r.point_after),
        "objective_after": rat_to_str(r.objective_after),
        "minimizer_face_dim": r.minimizer_face_dim,
        "was_ri_selection": r.was_ri_selection,
    }


def classification_to_json(c: Classification) -> dict:
    return {
        "is_local": c.is_local,
        "is_interior_local": c.is_interior_local,
        "is_pre_interior_local": c.is_pre_interior_local,
        "witness": c.witness,
    }


def trace_to_json(trace: Trace, prng_id: Optional[str] = None) -> dict:
    doc = {
        "schema": SCHEMA_VERSION,
        "records": [record_to_json(r) for r in trace.records],
        "final_point": vec_to_strs(trace.final_point),
        "rounds_completed": trace.rounds_completed,
        "stalled": trace.stalled,
        "certified_interior": trace.certified_interior,
    }
    if prng_id is not None:
        doc["prng"] = prng_id
    if trace.classification is not None:
        doc["classification"] = classification_to_json(trace.classification)
    return doc


def pwa_to_json(f: PiecewiseAffine) -> dict:
    return {
        "pieces": [{"g": vec_to_strs(g), "h": rat_to_str(h)} for g, h in f.pieces]
    }


def pwa_from_json(doc: dict) -> PiecewiseAffine:
    pieces = tuple(
        (vec_from_strs(p["g"]), rat_from_str(p["h"])) for p in doc["pieces"]
    )
    return PiecewiseAffine(pieces)


def model_to_json(m: PairwiseModel) -> dict:
    return {
        "nodes": m.n_nodes,
        "labels": list(m.labels),
        "unary": [[rat_to_str(c) for c in row] for row in m.unary],
        "edges": [
            {
                "uv": list(m.edges[e]),
                "costs": [[rat_to_str(c) for c in row] for row in m.pairwise[e]],
            }
            for e in range(len(m.edges))
        ],
    }


def model_from_json(doc: dict) -> PairwiseModel:
    labels = tuple(int(l) for l in doc["labels"])
    unary = tuple(tuple(rat_from_str(c) for c in row) for row in doc["unary"])
    edges = []
    pairwise = []
    for e in doc["edges"]:
        edges.append((int(e["uv"][0]), int(e["uv"][1])))
        pairwise.append(tuple(tuple(rat_from_str(c) for c in row) for row in e["costs"]))
    return PairwiseModel(labels, unary, tuple(edges), tuple(pairwise))
