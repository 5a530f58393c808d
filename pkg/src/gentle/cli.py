"""Command line interface.

Exit codes: 0 on success, 1 when a check or assertion fails, 2 on bad input.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys

from gentle.bqformat import load, serialize
from gentle.core import cycle_excess, is_admissible
from gentle.errors import (
    GentlenessViolation,
    InputError,
    InternalInvariantError,
    NotApplicableError,
    QuiverError,
    UnsupportedInputError,
)
from gentle.families import FAMILIES
from gentle.generate import random_gentle
from gentle.invariant import (
    _ThreadMaps,
    critical_arrows,
    derived_invariant,
    finite_gldim_proxy,
    phi_prime,
    thread_orbits,
)
from gentle.isomorphism import are_isomorphic
from gentle.transforms import coextend, lemma_extension_pipeline, reflect, shift_relation
from gentle.families import lambda0

log = logging.getLogger("gentle")


class CheckFailed(Exception):
    pass


def _emit(text, out):
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _json(obj):
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def cmd_check(args):
    bq = load(args.file)
    gentle = bq.is_gentle
    print(f"vertices      {len(bq.vertices)}")
    print(f"arrows        {len(bq.arrows)}")
    print(f"relations     {len(bq.relations)}")
    print(f"admissible    {is_admissible(bq.quiver, bq.relations)}")
    print(f"gentle        {gentle}")
    print(f"cycle excess  {cycle_excess(bq)}")
    print(f"two-cycle     {gentle and cycle_excess(bq) == 1}")
    if not gentle:
        raise CheckFailed("bound quiver is not gentle")


def cmd_phi(args):
    bq = load(args.file)
    phi = derived_invariant(bq)
    _emit(_json({"phi": phi.triples(), "norm": phi.norm(), "finite_gldim": finite_gldim_proxy(bq)}), None)


def cmd_threads(args):
    bq = load(args.file)
    maps = _ThreadMaps(bq)
    phi_orbits, prime_orbits = thread_orbits(bq)
    crit = critical_arrows(bq)
    _emit(_json({
        "permitted": [str(t) for t in maps.permitted],
        "forbidden": [str(t) for t in maps.forbidden],
        "phi1": {str(t): str(maps.phi1(t)) for t in maps.permitted},
        "phi2": {str(t): str(maps.phi2(t)) for t in maps.forbidden},
        "critical_arrows": crit,
        "phi_prime": {a: phi_prime(bq, a) for a in crit},
        "phi_orbits": [[str(t) for t in o] for o in phi_orbits],
        "phi_prime_orbits": prime_orbits,
    }), None)


def cmd_reflect(args):
    _emit(serialize(reflect(load(args.file), args.vertex)), args.out)


def cmd_coextend(args):
    bq = load(args.file)
    _emit(serialize(coextend(bq, bq.path(*args.path))), args.out)


def cmd_shift(args):
    _emit(serialize(shift_relation(load(args.file), args.index)), args.out)


def cmd_family(args):
    try:
        params = [int(p) for p in args.params]
    except ValueError:
        raise InputError("family parameters must be integers") from None
    arity = {"lambda0": 2, "lambda1": 5, "lambda2": 5}[args.name]
    if len(params) != arity:
        raise InputError(f"{args.name} takes {arity} parameters, got {len(params)}")
    _emit(serialize(FAMILIES[args.name](*params)), args.out)


def cmd_iso(args):
    iso = are_isomorphic(load(args.file_a), load(args.file_b))
    if iso is None:
        print("not isomorphic")
        raise CheckFailed("bound quivers are not isomorphic")
    _emit(_json(iso.to_json()), None)


def cmd_pipeline(args):
    trace = []
    result = lemma_extension_pipeline(args.p, args.r, trace)
    for step, bq in trace:
        print(f"# {step}: {len(bq.vertices)} vertices, relations {bq.sorted_relations()}")
    target = lambda0(args.p + 1, args.r)
    iso = are_isomorphic(result, target)
    if args.out:
        _emit(serialize(result), args.out)
    if iso is None:
        print(f"result is NOT isomorphic to lambda0({args.p + 1}, {args.r})")
        raise CheckFailed("pipeline result does not match")
    print(f"result is isomorphic to lambda0({args.p + 1}, {args.r})")
    print(_json(iso.to_json()), end="")


def cmd_sweep(args):
    from gentle.sweep import sweep

    families = sorted(FAMILIES) if "all" in args.family else args.family
    report = sweep(families, args.max, jobs=args.jobs)
    _emit(report.to_json(), args.out)
    for name, check in sorted(report.checks.items()):
        print(f"{'PASS' if check['passed'] else 'FAIL'}  {name}", file=sys.stderr)
    for fam, groups in sorted(report.within_family_collisions.items()):
        if groups:
            print(f"NOTE  {fam}: {len(groups)} within-family collision groups", file=sys.stderr)
    if not report.passed:
        raise CheckFailed("sweep checks failed")


def cmd_gen(args):
    _emit(serialize(random_gentle(args.seed, args.size)), args.out)


def build_parser():
    parser = argparse.ArgumentParser(prog="gentle", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_):
        p = sub.add_parser(name, help=help_)
        p.set_defaults(func=func)
        return p

    def with_out(p):
        p.add_argument("-o", "--out", help="write the result here instead of stdout")
        return p

    add("check", cmd_check, "validate a .bq file and report gentleness").add_argument("file")
    add("phi", cmd_phi, "print the derived invariant").add_argument("file")
    add("threads", cmd_threads, "print threads, bijections and orbits").add_argument("file")

    p = with_out(add("reflect", cmd_reflect, "generalized APR reflection at a vertex"))
    p.add_argument("file")
    p.add_argument("--vertex", required=True)

    p = with_out(add("coextend", cmd_coextend, "one-point coextension by a maximal path"))
    p.add_argument("file")
    p.add_argument("--path", nargs="+", required=True, help="arrows in composition order")

    p = with_out(add("shift", cmd_shift, "shift a relation along the Lambda0 chain"))
    p.add_argument("file")
    p.add_argument("--index", type=int, required=True)

    p = with_out(add("family", cmd_family, "emit a family representative"))
    p.add_argument("name", choices=sorted(FAMILIES))
    p.add_argument("params", nargs="+")

    p = add("iso", cmd_iso, "find a bound quiver isomorphism")
    p.add_argument("file_a")
    p.add_argument("file_b")

    p = with_out(add("pipeline", cmd_pipeline, "replay the Lambda0 extension argument"))
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--r", type=int, required=True)

    p = add("sweep", cmd_sweep, "compute invariants over the families")
    p.add_argument("--family", action="append", choices=sorted(FAMILIES) + ["all"], default=None)
    p.add_argument("--max", type=int, required=True, help="maximum number of vertices")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out", required=True)

    p = with_out(add("gen", cmd_gen, "random gentle bound quiver"))
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--size", type=int, required=True)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "family", "") is None:
        args.family = ["all"]
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        args.func(args)
    except CheckFailed as exc:
        print(f"gentle: {exc}", file=sys.stderr)
        return 1
    except (InputError, UnsupportedInputError, NotApplicableError, OSError) as exc:
        print(f"gentle: error: {exc}", file=sys.stderr)
        return 2
    except (GentlenessViolation, InternalInvariantError, QuiverError) as exc:
        print(f"gentle: invariant failure: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
