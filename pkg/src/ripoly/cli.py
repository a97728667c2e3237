"""Command-line interface.

Subcommands: solve, classify, run, verify, epigraph, diffusion. Inputs are
JSON documents; outputs are deterministic JSON (sorted keys), so identical
inputs yield byte-identical output files.

Exit codes: 0 success; 1 I/O or parse error (and suite violations for
`verify`); 2 semantic failure (unbounded direction for `run`, point outside
the polyhedron for `classify`); 3 unknown suite name.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from . import diffusion as dif
from . import lp, randgen, serialize, verify
from .descent import DirectionSet, classify, run
from .epigraph import lift, project_down
from .errors import (
    PointNotInPolyhedronError,
    RipolyError,
    UnboundedDirectionError,
    UnknownSuiteError,
)
from .polyhedron import RiStrategy
from .rationals import rat_to_str, vec_from_strs, vec_to_strs


def _dump(doc: dict, path: Optional[str]):
    text = json.dumps(doc, indent=2, sort_keys=True) + "\n"
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def _load(path: str) -> dict:
    if path == "-":
        return json.load(sys.stdin)
    with open(path) as fh:
        return json.load(fh)


def cmd_solve(args) -> int:
    doc = _load(args.input)
    P = serialize.polyhedron_from_json(doc["polyhedron"])
    obj = lp.LinearObjective(vec_from_strs(doc["objective"]))
    out = lp.solve(P, obj)
    result = {"schema": serialize.SCHEMA_VERSION, "status": out.status.value}
    if out.point is not None:
        result["point"] = vec_to_strs(out.point)
        result["value"] = rat_to_str(out.value)
    _dump(result, args.output)
    return 0


def cmd_classify(args) -> int:
    doc = _load(args.input)
    P = serialize.polyhedron_from_json(doc["polyhedron"])
    obj = lp.LinearObjective(vec_from_strs(doc["objective"]))
    dirs = serialize.directions_from_json(doc["directions"], P.ambient_dim)
    x = vec_from_strs(doc["point"])
    from .polyhedron import contains

    if not contains(P, x):
        sys.stderr.write("point is not in the polyhedron\n")
        return 2
    c = classify(P, obj, x, dirs)
    result = {"schema": serialize.SCHEMA_VERSION}
    result.update(serialize.classification_to_json(c))
    _dump(result, args.output)
    return 0


def cmd_run(args) -> int:
    inst = serialize.instance_from_json(_load(args.input))
    try:
        trace = run(
            inst.polyhedron,
            inst.objective,
            inst.start,
            inst.directions,
            inst.schedule,
            inst.rule,
            max_rounds=inst.max_rounds,
        )
    except UnboundedDirectionError as exc:
        sys.stderr.write(f"{exc}\n")
        return 2
    _dump(serialize.trace_to_json(trace, prng_id=randgen.PRNG_ID), args.output)
    return 0


def cmd_verify(args) -> int:
    try:
        results = verify.run_suite(args.suite, args.seed, args.count)
    except UnknownSuiteError as exc:
        sys.stderr.write(f"{exc}\n")
        return 3
    bad = [r for r in results if not r.ok]
    for r in results:
        tag = "PASS" if r.ok else "FAIL"
        line = f"{args.suite}[{r.index}] {tag}"
        if not r.ok:
            line += f": {r.detail}"
        print(line)
    print(f"{args.suite}: {len(results) - len(bad)}/{len(results)} passed")
    if bad:
        repro_path = args.reproducer or f"{args.suite}-reproducer.json"
        _dump(bad[0].reproducer, repro_path)
        sys.stderr.write(f"first counterexample written to {repro_path}\n")
        return 1
    return 0


def cmd_epigraph(args) -> int:
    doc = _load(args.input)
    X = serialize.polyhedron_from_json(doc["polyhedron"])
    f = serialize.pwa_from_json(doc["objective"])
    ep = lift(X, f)
    out = lp.solve(ep.lifted, ep.objective)
    result = {
        "schema": serialize.SCHEMA_VERSION,
        "lifted": serialize.polyhedron_to_json(ep.lifted),
        "status": out.status.value,
    }
    if out.point is not None:
        result["argmin"] = vec_to_strs(project_down(out.point))
        result["value"] = rat_to_str(out.value)
    _dump(result, args.output)
    return 0


def cmd_diffusion(args) -> int:
    m = serialize.model_from_json(_load(args.input))
    dif.check_desk_scale(m)
    phi = dif.zero_phi(m)
    pivots = dif.all_pivots(m)
    sweeps = []
    all_ri = True
    for _ in range(args.sweeps):
        ri_flags = []
        for pivot in pivots:
            ok = dif.verify_ri_property(m, phi, pivot)
            ri_flags.append(ok)
            all_ri = all_ri and ok
            phi = dif.diffusion_step(m, phi, pivot)
        sweeps.append(
            {
                "bound": rat_to_str(dif.dual_bound(m, phi)),
                "ri_certified": ri_flags,
            }
        )
    result = {
        "schema": serialize.SCHEMA_VERSION,
        "primal_min": rat_to_str(dif.primal_min(m)),
        "sweeps": sweeps,
        "all_steps_ri": all_ri,
        "phi": vec_to_strs(phi),
    }
    _dump(result, args.output)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="ripoly",
        description="exact block-coordinate descent over polyhedra",
    )
    sub = p.add_subparsers(dest="command", required=True)

    def io(sp):
        sp.add_argument("input", help="input JSON file, or - for stdin")
        sp.add_argument("-o", "--output", default=None, help="output file (default stdout)")

    sp = sub.add_parser("solve", help="minimize a linear objective exactly")
    io(sp)
    sp.set_defaults(func=cmd_solve)

    sp = sub.add_parser("classify", help="classify a point: local / interior / pre-interior")
    io(sp)
    sp.set_defaults(func=cmd_classify)

    sp = sub.add_parser("run", help="run descent rounds and emit a trace")
    io(sp)
    sp.set_defaults(func=cmd_run)

    sp = sub.add_parser("verify", help="run a named property suite on seeded instances")
    sp.add_argument("suite", help="one of: " + ", ".join(verify.SUITE_NAMES))
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--count", type=int, default=20)
    sp.add_argument("--reproducer", default=None, help="counterexample output path")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("epigraph", help="minimize a max-of-affine objective via lifting")
    io(sp)
    sp.set_defaults(func=cmd_epigraph)

    sp = sub.add_parser("diffusion", help="run diffusion sweeps with ri certification")
    io(sp)
    sp.add_argument("--sweeps", type=int, default=2)
    sp.set_defaults(func=cmd_diffusion)

    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (OSError, json.JSONDecodeError, KeyError, ValueError) as exc:
        sys.stderr.write(f"input error: {exc}\n")
        return 1
    except PointNotInPolyhedronError as exc:
        sys.stderr.write(f"{exc}\n")
        return 2
    except RipolyError as exc:
        sys.stderr.write(f"{exc}\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
