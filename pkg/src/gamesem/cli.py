"""Command line front end.

Exit codes: 0 for success (including an EQUIV verdict), 1 for an
INEQUIV verdict or a failed law check, 2 for bad input (unreadable
file, parse error, type error, mismatched arenas), 3 for an internal
consistency failure (the two decision methods disagree, or the engine
rejects its own play).

All output is canonical JSON: keys sorted, two-space indent, stable
element ordering, so repeated runs are byte-identical.
"""
from __future__ import annotations

import argparse
import json
import sys

from .bounds import Bounds
from .equiv import brute_force_leq, check_category_laws, obs_equiv
from .observation import ODetSet, observations, run_test
from .pcf import PcfError, denote, parse, pragmas, term_to_json, typecheck
from .plays import is_complete
from .strategy import InconsistentPlay, StrategyError, explore, tabulation_to_json


class _InputError(Exception):
    pass


def _bounds(ns) -> Bounds:
    return Bounds(max_nat=ns.max_nat, max_play_len=ns.max_play_len,
                  max_view_len=ns.max_view_len, fix_depth=ns.fix_depth)


def _emit(doc) -> None:
    sys.stdout.write(json.dumps(doc, indent=2, sort_keys=True) + "\n")


def _read(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as f:
            return f.read()
    except OSError as e:
        raise _InputError(f"cannot read {path}: {e.strerror}") from e


def _load_term(path: str):
    source = _read(path)
    rl = "add_rl" in pragmas(source)
    try:
        t = parse(source)
        ty = typecheck(t)
    except PcfError as e:
        raise _InputError(f"{path}: {e}") from e
    return t, ty, rl


def _denote_file(path: str, b: Bounds):
    t, ty, rl = _load_term(path)
    return denote(t, b, rl_add=rl), ty


def cmd_parse(ns) -> int:
    t, ty, _ = _load_term(ns.file)
    _emit({"term": term_to_json(t), "type": str(ty)})
    return 0


def cmd_denote(ns) -> int:
    b = _bounds(ns)
    sigma, ty = _denote_file(ns.file, b)
    _emit({
        "arena": sigma.arena.to_json(),
        "bounds": b.to_json(),
        "type": str(ty),
        "views": tabulation_to_json(sigma, b),
    })
    return 0


def cmd_traces(ns) -> int:
    b = _bounds(ns)
    sigma, _ = _denote_file(ns.file, b)
    tr = explore(sigma, b)
    plays = sorted(tr.plays, key=lambda p: (len(p.moves), p.moves))
    if ns.complete_only:
        plays = [p for p in plays if is_complete(p)]
    _emit({
        "arena": sigma.arena.to_json(),
        "bound_exceeded": tr.bound_exceeded,
        "bounds": b.to_json(),
        "count": len(plays),
        "plays": [p.to_json(arena_ref="name") for p in plays],
    })
    return 0


def cmd_obs(ns) -> int:
    b = _bounds(ns)
    sigma, _ = _denote_file(ns.file, b)
    _emit(observations(sigma, b).to_json(include_arena=True))
    return 0


def cmd_equiv(ns) -> int:
    b = _bounds(ns)
    s1, ty1 = _denote_file(ns.file1, b)
    s2, ty2 = _denote_file(ns.file2, b)
    if s1.arena != s2.arena:
        raise _InputError(f"type mismatch: {ty1} vs {ty2}")
    report = obs_equiv(s1, s2, b)
    doc = report.to_json()
    if ns.oracle:
        fwd = brute_force_leq(s1, s2, b)
        bwd = brute_force_leq(s2, s1, b)
        oracle_equal = fwd.holds and bwd.holds
        agrees = oracle_equal == report.equal
        doc["oracle"] = {
            "agrees": agrees,
            "left_leq_right": fwd.to_json(),
            "right_leq_left": bwd.to_json(),
        }
        _emit(doc)
        if not agrees:
            return 3
    else:
        _emit(doc)
    return 0 if report.equal else 1


def cmd_test(ns) -> int:
    b = _bounds(ns)
    sigma, _ = _denote_file(ns.file, b)
    try:
        doc = json.loads(_read(ns.set))
        s = ODetSet.from_json(doc)
    except (json.JSONDecodeError, ValueError, KeyError, TypeError) as e:
        raise _InputError(f"bad view-set file {ns.set}: {e}") from e
    if s.arena != sigma.arena:
        raise _InputError("view-set arena does not match the term's arena")
    verdict = run_test(sigma, s, b)
    _emit({"bounds": b.to_json(), "verdict": verdict.name})
    return 0


def cmd_laws(ns) -> int:
    report = check_category_laws(_bounds(ns))
    _emit(report.to_json())
    return 0 if report.all_pass else 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--max-nat", type=int, default=3,
                        help="largest numeral distinguished (default 3)")
    common.add_argument("--max-play-len", type=int, default=8,
                        help="play and interaction length cap (default 8)")
    common.add_argument("--max-view-len", type=int, default=6,
                        help="view length cap for enumeration (default 6)")
    common.add_argument("--fix-depth", type=int, default=4,
                        help="fixpoint unrolling depth (default 4)")

    p = argparse.ArgumentParser(
        prog="gamesem",
        description="Bounded game-semantics engine for a small functional language")
    sub = p.add_subparsers(dest="cmd", required=True)

    sp = sub.add_parser("parse", parents=[common], help="type-check and dump the AST")
    sp.add_argument("file")
    sp.set_defaults(fn=cmd_parse)

    sp = sub.add_parser("denote", parents=[common],
                        help="tabulate the term's strategy as a view table")
    sp.add_argument("file")
    sp.set_defaults(fn=cmd_denote)

    sp = sub.add_parser("traces", parents=[common],
                        help="enumerate the strategy's plays within bounds")
    sp.add_argument("file")
    sp.add_argument("--complete-only", action="store_true",
                    help="keep only completed plays")
    sp.set_defaults(fn=cmd_traces)

    sp = sub.add_parser("obs", parents=[common],
                        help="observational representation of the term")
    sp.add_argument("file")
    sp.set_defaults(fn=cmd_obs)

    sp = sub.add_parser("equiv", parents=[common],
                        help="decide bounded observational equivalence of two terms")
    sp.add_argument("file1")
    sp.add_argument("file2")
    sp.add_argument("--oracle", action="store_true",
                    help="cross-check with the brute-force test oracle")
    sp.set_defaults(fn=cmd_equiv)

    sp = sub.add_parser("test", parents=[common],
                        help="run one deterministic view-set as a test")
    sp.add_argument("file")
    sp.add_argument("--set", required=True, help="view-set JSON file")
    sp.set_defaults(fn=cmd_test)

    sp = sub.add_parser("laws", parents=[common],
                        help="check identity, associativity, and congruence laws")
    sp.set_defaults(fn=cmd_laws)

    return p


def main(argv=None) -> int:
    ns = build_parser().parse_args(argv)
    try:
        return ns.fn(ns)
    except _InputError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except (StrategyError, InconsistentPlay) as e:
        print(f"internal error: {e}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
