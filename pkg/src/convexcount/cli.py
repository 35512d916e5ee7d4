"""Command-line front end (``convexcount``)."""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from pathlib import Path

from . import harness, oracles, reductions
from .graph import GraphError, bridges, parse_graph, serialize_graph, stretch


def _read(path: str) -> str:
    return Path(path).read_text()


def _write(path: str, text: str) -> None:
    Path(path).write_text(text)


def cmd_count(args) -> int:
    kw = {"unbounded": args.unbounded}
    text = _read(args.input)
    if args.problem == "sat":
        print(oracles.count_sat(oracles.parse_cnf(text), **kw))
        return 0
    g = parse_graph(text)
    if args.problem == "convex2":
        print(oracles.count_convex_two_colourings(g, **kw))
    elif args.problem == "cocircuits":
        print(oracles.count_cocircuits(g, args.k, **kw))
    else:
        if args.k is None:
            raise SystemExit("count cuts needs -k")
        print(oracles.count_cuts_of_size(g, args.k, **kw))
    return 0


def cmd_spectrum(args) -> int:
    g = parse_graph(_read(args.input))
    if args.via_stretch:
        counts = reductions.stretch_counts(g, unbounded=args.unbounded)
        spec = reductions.recover_spectrum(counts, g.m, len(bridges(g)), not args.uncorrected)
    else:
        spec = oracles.cocircuit_spectrum(g, unbounded=args.unbounded)
    for k, n_k in enumerate(spec.values, 1):
        print(k, n_k)
    return 0


def cmd_reduce(args) -> int:
    if args.kind == "sat2cut":
        g, k, _ = reductions.sat_to_maxcut(oracles.parse_cnf(_read(args.input)))
        _write(args.output, serialize_graph(g))
        print(k)
    else:
        if args.k is None:
            raise SystemExit("reduce cut2cocirc needs -k")
        g, kp, _ = reductions.maxcut_to_cocircuits(parse_graph(_read(args.input)), args.k)
        _write(args.output, serialize_graph(g))
        print(kp)
    return 0


def cmd_stretch(args) -> int:
    g, _ = stretch(parse_graph(_read(args.input)), args.l)
    _write(args.output, serialize_graph(g))
    return 0


def cmd_chain(args) -> int:
    sys.stdout.write(reductions.compose_chain(oracles.parse_cnf(_read(args.input))).render())
    return 0


def cmd_verify(args) -> int:
    report = harness.verify_lemma(
        args.lemma, args.trials, args.seed, args.max_n, bridge_corrected=not args.uncorrected
    )
    sys.stdout.write(report.render())
    return 0 if report.ok else 1


def cmd_gen(args) -> int:
    if args.kind == "graph":
        if args.n is None or args.p is None:
            raise SystemExit("gen graph needs --n and --p")
        g = harness.gen_random_graph(args.n, Fraction(args.p), args.seed)
        sys.stdout.write(serialize_graph(g))
    else:
        if args.vars is None or args.clauses is None:
            raise SystemExit("gen formula needs --vars and --clauses")
        f = harness.gen_random_formula(args.vars, args.clauses, args.seed)
        sys.stdout.write(oracles.serialize_cnf(f))
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="convexcount", description="Exact cut, cocircuit and convex-colouring counts.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("count", help="brute-force count")
    c.add_argument("problem", choices=["convex2", "cocircuits", "cuts", "sat"])
    c.add_argument("-k", type=int, help="cut size (cuts) or size filter (cocircuits)")
    c.add_argument("-i", "--input", required=True)
    c.add_argument("--unbounded", action="store_true", help="lift the enumeration size bound")
    c.set_defaults(func=cmd_count)

    s = sub.add_parser("spectrum", help="cocircuit counts by size")
    s.add_argument("-i", "--input", required=True)
    s.add_argument("--via-stretch", action="store_true", help="recover from stretch totals")
    s.add_argument("--uncorrected", action="store_true", help="use C(l,2)*m as the stretch constant term")
    s.add_argument("--unbounded", action="store_true")
    s.set_defaults(func=cmd_spectrum)

    r = sub.add_parser("reduce", help="build a reduced instance")
    r.add_argument("kind", choices=["sat2cut", "cut2cocirc"])
    r.add_argument("-i", "--input", required=True)
    r.add_argument("-o", "--output", required=True)
    r.add_argument("-k", type=int)
    r.set_defaults(func=cmd_reduce)

    st = sub.add_parser("stretch", help="replace every edge by a path")
    st.add_argument("-i", "--input", required=True)
    st.add_argument("-l", type=int, required=True)
    st.add_argument("-o", "--output", required=True)
    st.set_defaults(func=cmd_stretch)

    ch = sub.add_parser("chain", help="sizes and factors of the whole reduction chain")
    ch.add_argument("-i", "--input", required=True)
    ch.set_defaults(func=cmd_chain)

    v = sub.add_parser("verify", help="check a lemma identity on seeded instances")
    v.add_argument("--lemma", type=int, choices=[1, 2, 3, 4], required=True)
    v.add_argument("--trials", type=int, default=20)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--max-n", type=int, default=6)
    v.add_argument("--uncorrected", action="store_true", help="lemma 3: judge the C(l,2)*m constant term")
    v.set_defaults(func=cmd_verify)

    g = sub.add_parser("gen", help="seeded random instance on stdout")
    g.add_argument("kind", choices=["graph", "formula"])
    g.add_argument("--n", type=int)
    g.add_argument("--p", help="edge probability as NUM/DEN")
    g.add_argument("--vars", type=int)
    g.add_argument("--clauses", type=int)
    g.add_argument("--seed", type=int, default=0)
    g.set_defaults(func=cmd_gen)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (GraphError, oracles.FormulaError, oracles.ResourceLimitError,
            reductions.ReductionError, ArithmeticError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
