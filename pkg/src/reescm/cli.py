"""Command-line interface.

Subcommands: verify, dump, staircase, dual, betti, random-suite.
Exit codes: 0 = all requested checks verified; 2 = a check refuted;
3 = resource exhaustion / not verified.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
import time

from . import groebner, rees, squarefree
from .groebner import Budget
from .report import (NOT_VERIFIED, REFUTED, SCHEMA_VERSION, VERIFIED,
                     verify_instance)
from .squarefree import MonomialIdeal, SquarefreeError

EXIT_OK = 0
EXIT_REFUTED = 2
EXIT_EXHAUSTED = 3


def _add_instance_flags(p):
    for name in ("m", "n", "s1", "t1", "s2", "t2"):
        p.add_argument(f"--{name}", type=int)


def _add_common_flags(p):
    p.add_argument("--field", type=int, default=0,
                   help="0 for the rationals, a prime p for GF(p)")
    p.add_argument("--budget", type=int, default=None,
                   help="Buchberger pair-processing cap")
    p.add_argument("--jobs", type=int,
                   default=int(os.environ.get("REES_CM_JOBS", "1")),
                   help="worker cap for parallel stages")
    p.add_argument("--config", type=str, default=None,
                   help="JSON file whose keys mirror the CLI flags")
    p.add_argument("--out", type=str, default=None,
                   help="path for the JSON report (default: stdout only)")


def _apply_config(args):
    if not getattr(args, "config", None):
        return args
    with open(args.config) as fh:
        conf = json.load(fh)
    for key, value in conf.items():
        attr = key.replace("-", "_")
        if hasattr(args, attr) and getattr(args, attr) in (None, 0) \
                and attr not in ("field",):
            setattr(args, attr, value)
        elif hasattr(args, attr) and getattr(args, attr) is None:
            setattr(args, attr, value)
    return args


def _instance_from_args(args):
    vals = [getattr(args, k) for k in ("m", "n", "s1", "t1", "s2", "t2")]
    if any(v is None for v in vals):
        raise SystemExit("instance flags --m --n --s1 --t1 --s2 --t2 required")
    return rees.build_instance(*vals)


def _budget(args):
    if args.budget is None:
        return None
    return Budget(max_pairs=args.budget)


def _emit(payload, args):
    text = json.dumps(payload, indent=2, sort_keys=True)
    if getattr(args, "out", None):
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    print(text)


# --- subcommands ---------------------------------------------------------------


def cmd_verify(args) -> int:
    inst = _instance_from_args(args)
    report = verify_instance(inst, field_char=args.field,
                             budget=_budget(args),
                             skip_oracle=args.skip_oracle)
    payload = report.as_dict()
    _emit(payload, args)
    verdict = payload["final_cm_verdict"]
    print(f"# instance {tuple(payload['instance'].values())[:6]}: "
          f"final CM verdict: {verdict}", file=sys.stderr)
    return report.exit_code()


def cmd_dump(args) -> int:
    inst = _instance_from_args(args)
    ring = rees.instance_ring(inst)
    tag = args.family
    if tag in rees.FAMILY_TAGS:
        for e in rees.family_generators(inst, tag, ring):
            print(e.value)
    elif tag in rees.INITIAL_FAMILY_TAGS:
        for mono in rees.initial_family_monomials(inst, tag, ring):
            print(ring.mono_str(mono))
    else:
        print(f"unknown family tag {tag!r}", file=sys.stderr)
        return EXIT_REFUTED
    return EXIT_OK


def cmd_staircase(args) -> int:
    try:
        primal = squarefree.staircase_ideal(args.m, args.n, args.l)
        closed = squarefree.staircase_dual_closed_form(args.m, args.n, args.l)
        generic = squarefree.alexander_dual(primal)
        equal = closed == generic
        linear = squarefree.has_linear_resolution(generic, args.field)
        reg = squarefree.regularity(generic, args.field)
    except SquarefreeError as exc:
        _emit({"schema": SCHEMA_VERSION, "error": str(exc)}, args)
        return EXIT_EXHAUSTED
    expected = args.n - (args.m - 2)
    payload = {
        "schema": SCHEMA_VERSION,
        "parameters": {"m": args.m, "n": args.n, "l": args.l},
        "closed_form_equals_generic": equal,
        "linear_resolution": linear,
        "regularity": reg,
        "expected_regularity": expected,
        "status": VERIFIED if equal and linear and reg == expected
                  else REFUTED,
    }
    _emit(payload, args)
    return EXIT_OK if payload["status"] == VERIFIED else EXIT_REFUTED


def cmd_dual(args) -> int:
    inst = _instance_from_args(args)
    try:
        dual = squarefree.dual_of_initial_ideal(inst,
                                                cross_check=args.cross_check)
    except SquarefreeError as exc:
        _emit({"schema": SCHEMA_VERSION, "error": str(exc)}, args)
        return EXIT_REFUTED
    for g in dual.generator_strings():
        print(g)
    print(f"# {len(dual)} generators, degrees {sorted(set(dual.degrees()))}",
          file=sys.stderr)
    return EXIT_OK


def _read_ideal(path) -> MonomialIdeal:
    sups = []
    names = []
    seen = set()
    with open(path) as fh:
        for line in fh:
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split("*")
            for v in parts:
                if v not in seen:
                    seen.add(v)
                    names.append(v)
            sups.append(parts)
    return MonomialIdeal.from_supports(tuple(names), sups)


def cmd_betti(args) -> int:
    if args.ideal_file:
        ideal = _read_ideal(args.ideal_file)
    else:
        inst = _instance_from_args(args)
        ideal = rees.initial_families(inst)
        if args.dual:
            ideal = squarefree.alexander_dual(ideal)
    try:
        table = squarefree.betti_numbers(ideal, args.field)
    except SquarefreeError as exc:
        _emit({"schema": SCHEMA_VERSION, "error": str(exc)}, args)
        return EXIT_EXHAUSTED
    payload = {
        "schema": SCHEMA_VERSION,
        "field": "QQ" if args.field == 0 else f"GF({args.field})",
        "betti": table.as_triples(),
        "regularity": table.regularity(),
        "projdim": table.projdim(),
    }
    _emit(payload, args)
    return EXIT_OK


def random_squarefree_ideal(rng, max_vars=8):
    nv = rng.randint(3, max_vars)
    names = tuple(f"v{i}" for i in range(nv))
    ngens = rng.randint(2, 6)
    masks = set()
    while len(masks) < ngens:
        size = rng.randint(1, max(1, nv - 1))
        sup = rng.sample(range(nv), size)
        masks.add(sum(1 << i for i in sup))
    return MonomialIdeal.from_masks(names, masks)


def run_random_suite(count: int, seed: int, max_vars: int = 8):
    rng = random.Random(seed)
    failures = []
    for idx in range(count):
        ideal = random_squarefree_ideal(rng, max_vars)
        dual = squarefree.alexander_dual(ideal)
        if squarefree.alexander_dual(dual) != ideal:
            failures.append((idx, "involution"))
        if dual != squarefree.dual_brute_force(ideal):
            failures.append((idx, "transversals"))
        bt = squarefree.betti_numbers(ideal)
        if squarefree.regularity(dual) != bt.projdim() + 1:
            failures.append((idx, "terai"))
        if squarefree.eagon_reiner_cm(ideal) != squarefree.reisner_cm(ideal):
            failures.append((idx, "er_vs_reisner"))
    return failures


def cmd_random_suite(args) -> int:
    t0 = time.time()
    failures = run_random_suite(args.count, args.seed, args.max_vars)
    payload = {
        "schema": SCHEMA_VERSION,
        "count": args.count,
        "seed": args.seed,
        "max_vars": args.max_vars,
        "failures": [{"index": i, "property": p} for i, p in failures],
        "status": VERIFIED if not failures else REFUTED,
        "seconds": round(time.time() - t0, 3),
    }
    _emit(payload, args)
    return EXIT_OK if not failures else EXIT_REFUTED


# --- parser --------------------------------------------------------------------


def build_parser():
    top = argparse.ArgumentParser(
        prog="reescm",
        description="Groebner and Cohen-Macaulayness certification for "
                    "Rees ideals of diagonal determinantal instances")
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="run the full verification pipeline")
    _add_instance_flags(p)
    _add_common_flags(p)
    p.add_argument("--skip-oracle", action="store_true",
                   help="skip the elimination oracle (Buchberger check only)")
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("dump", help="dump one family, bit-exact")
    _add_instance_flags(p)
    _add_common_flags(p)
    p.add_argument("--family", required=True,
                   help=f"one of {rees.FAMILY_TAGS + rees.INITIAL_FAMILY_TAGS}")
    p.set_defaults(fn=cmd_dump)

    p = sub.add_parser("staircase", help="staircase dual closed-form check")
    p.add_argument("m", type=int)
    p.add_argument("n", type=int)
    p.add_argument("l", type=int)
    _add_common_flags(p)
    p.set_defaults(fn=cmd_staircase)

    p = sub.add_parser("dual", help="Alexander dual of the initial ideal")
    _add_instance_flags(p)
    _add_common_flags(p)
    p.add_argument("--cross-check", action="store_true",
                   help="also intersect the per-family component duals")
    p.set_defaults(fn=cmd_dual)

    p = sub.add_parser("betti", help="Betti table of a monomial ideal")
    _add_instance_flags(p)
    _add_common_flags(p)
    p.add_argument("--ideal-file", type=str, default=None,
                   help="one generator per line, variables joined by *")
    p.add_argument("--dual", action="store_true",
                   help="use the dual of the instance initial ideal")
    p.set_defaults(fn=cmd_betti)

    p = sub.add_parser("random-suite", help="randomized duality property suite")
    _add_common_flags(p)
    p.add_argument("--count", type=int, default=200)
    p.add_argument("--seed", type=int, default=20260826)
    p.add_argument("--max-vars", type=int, default=8)
    p.set_defaults(fn=cmd_random_suite)

    return top


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    args = _apply_config(args)
    return args.fn(args)


if __name__ == "__main__":
    sys.exit(main())
