"""Command-line entry point: ``tbt <command> ...``.

Exit codes: 0 success, 1 a check failed, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import os
import random
import sys
import time

from .actions import action_from_spec
from .cantor import PointPrefix, format_color
from .complexes import (
    DEFAULT_VERTEX_CAP,
    ComplexTooLarge,
    build_E,
    build_VE,
    e_bound,
    homology,
    matching_complex,
    nu,
    ve_bound,
)
from .elements import equal, germinal_twist_set, is_untwisted
from .factorization import factorize, rho
from .forests import as_forest, coset_leq, elementary_core, forest_join, spectrum
from .relations import check_relations
from .words import EvaluationError, ParseError, evaluate

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _seed(args) -> int:
    env = os.environ.get("TBT_SEED")
    if env is not None:
        try:
            return int(env)
        except ValueError as exc:
            raise UsageError(f"TBT_SEED must be an integer, got {env!r}") from exc
    return args.seed


def _action_name(args) -> str:
    # resolved here because argparse parents share one --action object
    if args.action is not None:
        return args.action
    return "trivial" if args.command == "complex" else "c2"


def _action(args):
    try:
        return action_from_spec(_action_name(args))
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _eval(text, action):
    try:
        return evaluate(text, action)
    except (ParseError, EvaluationError) as exc:
        raise UsageError(str(exc)) from exc


def _twists(h):
    a = h.action
    return "{" + ", ".join(sorted(a.format_element(g) for g in germinal_twist_set(h))) + "}"


def _colors(cs):
    return "{" + ", ".join(format_color(c) for c in sorted(cs, key=lambda c: (type(c).__name__, c))) + "}"


def cmd_eval(args) -> int:
    a = _action(args)
    h = _eval(args.word, a)
    spectrum_text = _colors(spectrum(h)) if is_untwisted(h) else "-"
    if args.format == "rows":
        print("element,rank,corank,twists,spectrum")
        print(f"\"{h.canonical()}\",{h.rank},{h.corank},\"{_twists(h)}\",\"{spectrum_text}\"")
    else:
        print(h.canonical())
        print(f"rank: {h.rank}")
        print(f"corank: {h.corank}")
        print(f"germinal twists: {_twists(h)}")
        print(f"spectrum: {spectrum_text}")
    return EXIT_OK


def cmd_relations(args) -> int:
    a = _action(args)
    rng = random.Random(_seed(args))
    t0 = time.perf_counter()
    rep = check_relations(a, rng, args.count)
    if args.format == "rows":
        print("action,relation,instances,failures")
        for name in rep.counts:
            print(f"{a.name},{name},{rep.counts[name]},{rep.failures[name]}")
    else:
        for name in rep.counts:
            verdict = "PASS" if rep.failures[name] == 0 else "FAIL"
            print(f"{name:<16} {rep.counts[name] - rep.failures[name]:>5}/{rep.counts[name]}  {verdict}")
        print(f"{a.name}: {'PASS' if rep.ok else 'FAIL'} ({time.perf_counter() - t0:.1f} s)")
    return EXIT_OK if rep.ok else EXIT_FAIL


def cmd_factorize(args) -> int:
    a = _action(args)
    h = _eval(args.word, a)
    s = a.parse_color(args.color) if args.color else a.orbit_representatives()[0]
    try:
        fw = factorize(h, s)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    ok = equal(fw.evaluate(), h)
    if args.format == "rows":
        print("index,kind,atom")
        for i, at in enumerate(fw.atoms):
            val = at.value if at.kind == "SV" else a.format_element(at.value)
            print(f"{i},{at.kind},\"{val}\"")
    else:
        for at in fw.atoms:
            if at.kind == "SV":
                print(f"SV    {at.value}")
            else:
                print(f"iota1 [{format_color(at.color)}] {a.format_element(at.value)}")
        print(f"recomposition: {'PASS' if ok else 'FAIL'}")
    return EXIT_OK if ok else EXIT_FAIL


def cmd_rho(args) -> int:
    a = _action(args)
    h = _eval(args.word, a)
    try:
        kappa = PointPrefix.parse(args.basepoint) if args.basepoint else None
        g = rho(h, kappa)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    print(a.format_element(g))
    return EXIT_OK


def cmd_complex(args) -> int:
    m = args.m
    if m < 2:
        raise UsageError("m must be at least 2")
    if args.kind == "matching":
        bound = nu(m) - 1
        top = max(bound, args.degree if args.degree is not None else 0)
        c = matching_complex(m, max_dim=top + 1)
    else:
        name = _action_name(args)
        if name != "trivial" and not name.startswith("trivial:"):
            raise UsageError("VE/E complexes need the trivial action")
        bound = ve_bound(m) if args.kind == "VE" else e_bound(m)
        top = max(bound, args.degree if args.degree is not None else 0)
        builder = build_VE if args.kind == "VE" else build_E
        try:
            c = builder(m, args.colors, max_dim=top + 1, cap=args.cap)
        except ComplexTooLarge as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_USAGE
    h = homology(c, top)
    passed = all(h[d][0] == 0 and not h[d][1] for d in range(0, bound + 1))
    if args.facets:
        print(c.to_text())
        return EXIT_OK
    if args.format == "rows":
        print("complex,degree,rank,torsion")
        for d, (r, tors) in enumerate(h):
            print(f"{c.name},{d},{r},{' '.join(map(str, tors))}")
    else:
        print(f"{c.name}: f-vector {c.f_vector()}")
        print(f"{'degree':>6}  {'rank':>5}  torsion")
        for d, (r, tors) in enumerate(h):
            print(f"{d:>6}  {r:>5}  {' '.join(f'Z/{t}' for t in tors) or '-'}")
        if bound < 0:
            print(f"bound {bound}: nothing to check  PASS")
        else:
            print(f"vanishing through degree {bound}: {'PASS' if passed else 'FAIL'}")
    return EXIT_OK if passed else EXIT_FAIL


def cmd_core(args) -> int:
    a = _action(args)
    v, w = _eval(args.v, a), _eval(args.w, a)
    if v.corank != w.corank:
        raise UsageError("v and w must have the same corank")
    if not coset_leq(v, w):
        print("error: [v] is not below [w]", file=sys.stderr)
        return EXIT_FAIL
    core = elementary_core(v, w, random.Random(_seed(args)))
    print(core.canonical())
    return EXIT_OK


def cmd_join(args) -> int:
    a = _action(args)
    try:
        f1, f2 = as_forest(_eval(args.f1, a)), as_forest(_eval(args.f2, a))
        j = forest_join(f1, f2)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    print(j)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--action", default=None,
                        help="trivial:<k> | c2 | F | houghton:<n> (default: c2; trivial for complex)")
    common.add_argument("--seed", type=int, default=0, help="random seed (TBT_SEED overrides)")
    common.add_argument("--format", choices=["text", "rows"], default="text")

    p = argparse.ArgumentParser(prog="tbt", description="Exact computations with twisted homeomorphisms of multicolored Cantor cubes.")
    sub = p.add_subparsers(dest="command", required=True)

    q = sub.add_parser("eval", parents=[common], help="evaluate a word")
    q.add_argument("word")
    q.set_defaults(func=cmd_eval)

    q = sub.add_parser("relations", parents=[common], help="check the eight basic relations")
    q.add_argument("--count", type=int, default=100, help="instances per relation")
    q.set_defaults(func=cmd_relations)

    q = sub.add_parser("factorize", parents=[common], help="factor over SV and iota1(G)")
    q.add_argument("word")
    q.add_argument("--color", help="color s for iota1 (default: first orbit representative)")
    q.set_defaults(func=cmd_factorize)

    q = sub.add_parser("rho", parents=[common], help="germinal twist at the basepoint")
    q.add_argument("word")
    q.add_argument("--basepoint", help="P[1]{c=w,...}; default is the all-zeros point")
    q.set_defaults(func=cmd_rho)

    q = sub.add_parser("complex", parents=[common], help="homology of matching, VE_m or E_m complexes")
    q.add_argument("kind", choices=["matching", "VE", "E"])
    q.add_argument("m", type=int)
    q.add_argument("--colors", type=int, default=1, help="number of colors for VE/E")
    q.add_argument("--degree", type=int, help="report homology through this degree")
    q.add_argument("--cap", type=int, default=DEFAULT_VERTEX_CAP, help="vertex cap")
    q.add_argument("--facets", action="store_true", help="print the facet list instead")
    q.set_defaults(func=cmd_complex)

    q = sub.add_parser("core", parents=[common], help="elementary core of [v] <= [w]")
    q.add_argument("v")
    q.add_argument("w")
    q.set_defaults(func=cmd_core)

    q = sub.add_parser("join", parents=[common], help="join of two forests")
    q.add_argument("f1")
    q.add_argument("f2")
    q.set_defaults(func=cmd_join)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
