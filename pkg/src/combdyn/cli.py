"""Command-line front end.

Exit codes: 0 success or theorem holds, 1 refuted (or not homomesic),
2 usage or parse error, 3 input violates a map's precondition.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Callable

from . import bijections as bj
from . import dynamics as dy
from . import statistics as st
from . import tableaux as tb
from .core import (
    AntichainA,
    AntichainB,
    DomainError,
    DyckWord,
    NoncrossingMatching,
    Permutation,
    Tableau,
    dump,
    enumerate_antichains,
    enumerate_antichains_B,
    enumerate_avoiders,
    enumerate_dyck,
    infer_antichain_n,
    parse_matching,
    parse_tableau,
    reverse_complement,
)
from .verify import THEOREMS, centrally_symmetric_matchings, verify

EXIT_OK, EXIT_REFUTED, EXIT_USAGE, EXIT_DOMAIN = 0, 1, 2, 3
DEFAULT_MAX_N = 10


class UsageError(Exception):
    pass


# ---------------------------------------------------------------------------
# input parsing, keyed by object type


def _json(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"invalid JSON: {text!r}") from exc


def _parse_antichain(text: str, args) -> AntichainA:
    elements = _json(text)
    n = args.n if args.n is not None else max(infer_antichain_n(elements), 1)
    return AntichainA(n, elements)


def _parse_antichain_B(text: str, args) -> AntichainB:
    elements = _json(text)
    m = args.m if args.m is not None else max((i + j + 1) // 2 for i, j in elements) if elements else 1
    return AntichainB(m, elements)


PARSERS: dict[type, Callable] = {
    Permutation: lambda text, args: Permutation.parse(text),
    DyckWord: lambda text, args: DyckWord.parse(text),
    AntichainA: _parse_antichain,
    AntichainB: _parse_antichain_B,
    NoncrossingMatching: lambda text, args: parse_matching(text),
    Tableau: lambda text, args: parse_tableau(text),
}


def parse_input(kind: type, text: str, args):
    if text == "-":
        text = sys.stdin.read()
    try:
        return PARSERS[kind](text.strip(), args)
    except (DomainError, TypeError, ValueError) as exc:
        raise UsageError(f"cannot read a {kind.__name__} from {text.strip()!r}: {exc}") from exc


MAPS: dict[str, tuple[type, Callable]] = {
    "e_p": (Permutation, bj.e_p),
    "e_p_inv": (DyckWord, bj.e_p_inv),
    "e_v": (Permutation, bj.e_v),
    "e_v_inv": (DyckWord, bj.e_v_inv),
    "d_v": (Permutation, bj.d_v),
    "lk": (DyckWord, bj.lk),
    "lka": (AntichainA, bj.lka),
    "lks": (Permutation, bj.lks),
    "exc": (Permutation, bj.exc_map),
    "exc_inv": (AntichainA, bj.exc_inv),
    "ant": (DyckWord, bj.ant_map),
    "ant_inv": (AntichainA, bj.ant_inv),
    "path": (AntichainA, bj.path_map),
    "path_inv": (DyckWord, bj.path_inv),
    "match": (DyckWord, bj.match_map),
    "match_inv": (NoncrossingMatching, bj.match_inv),
    "hat": (AntichainB, bj.hat),
    "unhat": (AntichainA, bj.unhat),
    "rc": (Permutation, reverse_complement),
    "inverse": (Permutation, Permutation.inverse),
    "rsk": (Permutation, tb.rsk),
    "rskd": (Permutation, tb.rskd),
    "rskd_inv": (DyckWord, tb.rskd_inv),
    "tab": (DyckWord, tb.tab),
    "tab_inv": (Tableau, tb.tab_inv),
    "evac": (Tableau, tb.evacuation),
    "evac_rot": (Tableau, tb.evac_via_rotation),
    "partial_match": (Tableau, tb.partial_match),
    "ast": (AntichainA, dy.ast),
    "ast_b": (AntichainB, dy.ast_b),
    "bottoms": (NoncrossingMatching, dy.bottoms),
    **{name: entry for name, entry in dy.DYNAMICS.items() if name not in ("ri", "rf")},
}


# ---------------------------------------------------------------------------
# commands


def _max_n(args) -> int:
    if args.max_n is not None:
        return args.max_n
    env = os.environ.get("COMBDYN_MAX_N")
    if env:
        try:
            return int(env)
        except ValueError:
            raise UsageError(f"COMBDYN_MAX_N must be an integer, got {env!r}") from None
    return DEFAULT_MAX_N


def _check_cap(size: int, args) -> None:
    cap = _max_n(args)
    if size > cap:
        raise UsageError(f"size {size} exceeds the cap {cap} (raise it with --max-n or COMBDYN_MAX_N)")


def _emit(obj, fmt: str) -> None:
    print(dump(obj, fmt))


def cmd_map(args) -> int:
    if args.name not in MAPS:
        raise UsageError(f"unknown map {args.name!r}; known: {', '.join(sorted(MAPS))}")
    kind, f = MAPS[args.name]
    x = parse_input(kind, args.input, args)
    _emit(f(x), args.format)
    return EXIT_OK


def _stat_columns(names: str | None, kind: type) -> list[tuple[str, Callable]]:
    if not names:
        return []
    return [(name, st.resolve_statistic(name, kind)) for name in names.split(",") if name]


def _fraction_text(x) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def cmd_orbit(args) -> int:
    if args.dynamic not in dy.DYNAMICS:
        raise UsageError(f"unknown dynamic {args.dynamic!r}; known: {', '.join(sorted(dy.DYNAMICS))}")
    kind, _ = dy.DYNAMICS[args.dynamic]
    if kind not in PARSERS:
        raise UsageError(f"dynamic {args.dynamic!r} has no command-line input format")
    x = parse_input(kind, args.input, args)
    try:
        columns = _stat_columns(args.stats, kind)
    except DomainError as exc:
        raise UsageError(str(exc)) from exc
    orbit = dy.orbit_of(x, args.dynamic)
    if args.format == "json":
        rows = [{"element": json.loads(dump(e, "json")), **{n: _json_number(g(e)) for n, g in columns}}
                for e in orbit.elements]
        print(json.dumps({"dynamic": args.dynamic, "size": orbit.size, "orbit": rows}))
    else:
        for e in orbit.elements:
            cells = [dump(e)] + [_fraction_text(g(e)) for _, g in columns]
            print("\t".join(cells))
    return EXIT_OK


def _json_number(x):
    return x.numerator if x.denominator == 1 else [x.numerator, x.denominator]


def cmd_homomesy(args) -> int:
    if args.n is None:
        raise UsageError("homomesy needs --n")
    _check_cap(args.n, args)
    if args.dynamic not in dy.DYNAMICS:
        raise UsageError(f"unknown dynamic {args.dynamic!r}")
    kind, _ = dy.DYNAMICS[args.dynamic]
    try:
        st.resolve_statistic(args.stat, kind)
    except DomainError as exc:
        raise UsageError(str(exc)) from exc
    report = st.homomesy_report(args.stat, args.dynamic, args.n, max_n=args.n)
    if args.format == "json":
        print(report.to_json())
    else:
        for o in report.orbits:
            print(f"{dump(o.representative)}\tsize {o.size}\tavg {_fraction_text(o.average)}")
        verdict = f"homomesic, c = {_fraction_text(report.c)}" if report.homomesic else "not homomesic"
        print(f"{report.orbit_count} orbits; {verdict}")
    return EXIT_OK if report.homomesic else EXIT_REFUTED


def cmd_verify(args) -> int:
    ids = list(THEOREMS) if args.theorem == "all" else [args.theorem]
    for tid in ids:
        if tid not in THEOREMS:
            raise UsageError(f"unknown theorem {tid!r}; known: all, {', '.join(THEOREMS)}")
    status = EXIT_OK
    for tid in ids:
        theorem = THEOREMS[tid]
        hi = args.m if theorem.param == "m" else args.n
        if hi is None:
            hi = theorem.hi
        elif args.theorem == "all":
            hi = min(hi, theorem.hi)
        _check_cap(hi * 2 if theorem.param == "m" else hi, args)
        result = verify(tid, hi=hi, jobs=args.jobs)
        if args.format == "json":
            print(json.dumps(result.to_dict()))
        else:
            lo, top = result.n_range
            line = f"{tid}: {'pass' if result.passed else 'FAIL'} ({theorem.param}={lo}..{top}, {result.elapsed:.2f}s)"
            if result.details:
                line += " counts " + ",".join(str(v) for v in result.details.values())
            if not result.passed:
                line += f" counterexample {result.counterexample}"
            print(line)
        if not result.passed:
            status = EXIT_REFUTED
    return status


ENUMERATORS: dict[str, tuple[str, Callable]] = {
    "avoiders": ("n", enumerate_avoiders),
    "antichains": ("n", enumerate_antichains),
    "antichains-b": ("m", enumerate_antichains_B),
    "dyck": ("n", enumerate_dyck),
    "matchings": ("n", lambda n: (bj.match_map(d) for d in enumerate_dyck(n))),
    "csnc": ("n", centrally_symmetric_matchings),
}


def cmd_enumerate(args) -> int:
    param, gen = ENUMERATORS[args.kind]
    size = args.m if param == "m" else args.n
    if size is None:
        raise UsageError(f"enumerate {args.kind} needs --{param}")
    _check_cap(2 * size if param == "m" else size, args)
    for x in gen(size):
        _emit(x, args.format)
    return EXIT_OK


# ---------------------------------------------------------------------------
# argument parsing


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int, help="size parameter (antichains live in A^(n-1))")
    common.add_argument("--m", type=int, help="type B rank")
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--max-n", type=int, default=None,
                        help=f"size cap (default {DEFAULT_MAX_N}, or COMBDYN_MAX_N)")
    common.add_argument("--jobs", type=int, default=1, help="worker processes for verify")

    parser = argparse.ArgumentParser(prog="combdyn", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("map", parents=[common], help="apply a bijection or dynamic once")
    p.add_argument("name")
    p.add_argument("input", help="serialized object, or - for stdin")
    p.set_defaults(func=cmd_map)

    p = sub.add_parser("orbit", parents=[common], help="list the orbit of an object")
    p.add_argument("dynamic")
    p.add_argument("input", help="serialized object, or - for stdin")
    p.add_argument("--stats", help="comma-separated statistics, e.g. fp,h2,l2,inv")
    p.set_defaults(func=cmd_orbit)

    p = sub.add_parser("homomesy", parents=[common], help="exact orbit averages of a statistic")
    p.add_argument("stat")
    p.add_argument("dynamic")
    p.set_defaults(func=cmd_homomesy)

    p = sub.add_parser("verify", parents=[common], help="exhaustively check a theorem id (or all)")
    p.add_argument("theorem")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("enumerate", parents=[common], help="list every object of a kind")
    p.add_argument("kind", choices=sorted(ENUMERATORS))
    p.set_defaults(func=cmd_enumerate)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DomainError as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except BrokenPipeError:
        return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
