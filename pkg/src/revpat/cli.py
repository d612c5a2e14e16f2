"""Command line front end.

Commands: classify, canon, class, graph, generate, search, verify.  The
--json flag switches every command, including error paths, to JSON on
stdout.  Exit status: 0 on success, 1 when a verification report fails,
2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import engine, matcher, patterns, sequences, verify

_INDEX_TEXT = {
    engine.Avoidability.TWO: "2",
    engine.Avoidability.THREE: "3",
    engine.Avoidability.UNAVOIDABLE: "infinity",
}


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    # SUPPRESS keeps a subcommand's default from clobbering a top-level --json
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="emit JSON output")

    parser = argparse.ArgumentParser(
        prog="revpat",
        description="avoidability toolkit for binary patterns with reversal",
        parents=[common],
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", parents=[common],
                       help="avoidability index of a pattern (2, 3 or infinity)")
    p.add_argument("pattern")

    p = sub.add_parser("canon", parents=[common], help="canonical form of a pattern")
    p.add_argument("pattern")

    p = sub.add_parser("class", parents=[common],
                       help="equivalence class of a pattern, sorted")
    p.add_argument("pattern")

    p = sub.add_parser("graph", parents=[common], help="pattern graph edges")
    p.add_argument("pattern")
    p.add_argument("--check-bipartite", action="store_true",
                   help="also report a 2-coloring or an odd closed walk")

    p = sub.add_parser("generate", parents=[common], help="prefix of a named sequence")
    p.add_argument("sequence", metavar="seqid",
                   help="one of: " + ", ".join(sequences.SEQUENCE_IDS))
    p.add_argument("--length", type=int, required=True)
    p.add_argument("--lookahead", type=int, default=sequences.DEFAULT_LOOKAHEAD)
    p.add_argument("--cache", default=None,
                   help="cache directory (default: $REVPAT_CACHE or ./cache)")

    p = sub.add_parser("search", parents=[common],
                       help="backtracking search for an avoiding word")
    p.add_argument("pattern")
    p.add_argument("--alphabet", type=int, required=True, metavar="K")
    p.add_argument("--target-length", type=int, required=True, metavar="N")
    p.add_argument("--depth-limit", type=int, default=None, metavar="D")

    p = sub.add_parser("verify", parents=[common], help="run the verification suite")
    p.add_argument("--only", default=None, metavar="ID",
                   help="one of: " + ", ".join(verify.CHECKS))
    p.add_argument("--params", nargs="*", default=[], metavar="K=V",
                   help="override check parameters, e.g. n=400")

    return parser


def _parse_params(pairs: list[str]) -> dict:
    out = {}
    for pair in pairs:
        if "=" not in pair:
            raise ValueError(f"parameter {pair!r} is not of the form key=value")
        key, value = pair.split("=", 1)
        try:
            out[key] = int(value)
        except ValueError:
            out[key] = value
    return out


def _emit(payload: dict, as_json: bool, human: str) -> None:
    if as_json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(human)


def run(argv: list[str]) -> int:
    as_json = "--json" in argv
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        if exc.code not in (0, None) and as_json:
            print(json.dumps({"error": "usage error"}))
        return 0 if exc.code in (0, None) else 2
    as_json = getattr(args, "json", False)

    try:
        return _dispatch(args, as_json)
    except (ValueError, RuntimeError) as exc:
        if as_json:
            print(json.dumps({"error": str(exc)}))
        else:
            print(f"error: {exc}", file=sys.stderr)
        return 2


def _dispatch(args: argparse.Namespace, as_json: bool) -> int:
    if args.command == "classify":
        p = patterns.parse_pattern(args.pattern)
        index = engine.classify(p)
        _emit({"pattern": p, "avoidability_index": index.value}, as_json,
              _INDEX_TEXT[index])
        return 0

    if args.command == "canon":
        p = patterns.parse_pattern(args.pattern)
        c = patterns.canonical(p)
        _emit({"pattern": p, "canonical": c}, as_json, c)
        return 0

    if args.command == "class":
        p = patterns.parse_pattern(args.pattern)
        members = patterns.sorted_patterns(patterns.equivalence_class(p))
        _emit({"pattern": p, "members": members}, as_json, "\n".join(members))
        return 0

    if args.command == "graph":
        p = patterns.parse_pattern(args.pattern)
        g = engine.pattern_graph(p)
        payload: dict = {"pattern": p, "vertices": list(g.vertices),
                         "edges": [list(e) for e in g.edges]}
        lines = [" -- ".join(e) for e in g.edges] or ["(no edges)"]
        if args.check_bipartite:
            result = engine.bipartite_check(g)
            payload["bipartite"] = result.is_bipartite
            payload["coloring"] = result.coloring
            payload["odd_cycle"] = result.odd_cycle
            if result.is_bipartite:
                coloring = " ".join(f"{v}={c}" for v, c in sorted(
                    result.coloring.items(), key=lambda kv: patterns.pattern_key(kv[0])))
                lines.append(f"bipartite: yes ({coloring})")
            else:
                lines.append("bipartite: no (odd walk: " + " - ".join(result.odd_cycle) + ")")
        _emit(payload, as_json, "\n".join(lines))
        return 0

    if args.command == "generate":
        if args.length < 0:
            raise ValueError("--length must be non-negative")
        cache_dir = args.cache or os.environ.get("REVPAT_CACHE") or "./cache"
        word = sequences.sequence_prefix(args.sequence, args.length,
                                         lookahead=args.lookahead, cache_dir=cache_dir)
        _emit({"sequence": args.sequence, "length": args.length,
               "lookahead": args.lookahead, "word": word}, as_json, word)
        return 0

    if args.command == "search":
        p = patterns.parse_pattern(args.pattern)
        if not p:
            raise ValueError("search needs a non-empty pattern")
        if args.target_length < 1:
            raise ValueError("--target-length must be positive")
        depth = args.depth_limit if args.depth_limit is not None else args.target_length
        report = engine.prove_k_unavoidable(p, args.alphabet, depth)
        payload = report.as_dict()
        if report.terminated:
            payload["outcome"] = "exhausted"
            human = (f"exhausted at depth {report.longest_word_length}: longest word over "
                     f"{args.alphabet} letters avoiding {p} is {report.longest_word or '(empty)'}")
        else:
            assert matcher.avoids(report.longest_word, p)
            payload["outcome"] = "witness"
            human = f"found avoiding word of length {report.longest_word_length}: {report.longest_word}"
        _emit(payload, as_json, human)
        return 0

    if args.command == "verify":
        params = _parse_params(args.params)
        reports = verify.run_checks(only=args.only, params=params)
        if as_json:
            print(json.dumps([r.as_dict() for r in reports], indent=2, sort_keys=True))
        else:
            for r in reports:
                status = "PASS" if r.passed else "FAIL"
                print(f"{status} {r.check_id} ({r.elapsed:.2f}s)")
                if not r.passed:
                    print(f"     counterexample: {r.counterexample}")
        return 0 if all(r.passed for r in reports) else 1

    raise ValueError(f"unknown command {args.command!r}")


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
