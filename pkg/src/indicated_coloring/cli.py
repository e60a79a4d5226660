"""Command-line front end.

Graph arguments accept generator expressions ("P3[K2]", "K[C5](1,2,1,2,1)"),
graph6 strings ("Bw" or "g6:Bw"), inline JSON, or paths to JSON files.

Commands: gen, params, chi-i, play, recognize, verify, serve.
`verify` exits 0 iff no case failed.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from .expressions import ProductNode, resolve_graph_input
from .graph6 import encode_graph6
from .graphs import GraphError
from .harness import SUITES, run_suite
from .parameters import param_report
from .recognizers import classify, family_membership_F
from .solver import (
    DEFAULT_LIMITS,
    Limits,
    PolicyError,
    indicated_chromatic_number,
    play_game,
)
from .strategies import make_ann_policy, make_ben_policy


def _add_limit_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--max-states", type=int, default=DEFAULT_LIMITS.max_states,
                   help="solver state budget before ResourceLimit")
    p.add_argument("--max-millis", type=int, default=DEFAULT_LIMITS.max_millis,
                   help="solver time budget (ms) before ResourceLimit")
    p.add_argument("--max-vertices", type=int, default=DEFAULT_LIMITS.max_vertices,
                   help="largest graph the exact solver accepts")


def _limits(args) -> Limits:
    return Limits(args.max_states, args.max_millis, args.max_vertices)


def _graph_arg(text: str):
    graph, node = resolve_graph_input(text)
    factors = None
    if isinstance(node, ProductNode):
        factors = (node.left.build(), node.right.build())
    return graph, factors


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="indicated-coloring",
        description="Exact engine and verification harness for the "
                    "indicated-coloring game.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="build a graph and print it")
    p.add_argument("expr", help="generator expression / graph6 / JSON")
    p.add_argument("--format", choices=["g6", "json"], default="g6")

    p = sub.add_parser("params", help="delta, Delta, omega, chi, col")
    p.add_argument("graph")

    p = sub.add_parser("chi-i", help="indicated chromatic number and winning set")
    p.add_argument("graph")
    p.add_argument("--kmax", type=int, default=None,
                   help="largest palette to test (default col(G))")
    _add_limit_flags(p)

    p = sub.add_parser("play", help="play one game between two policies")
    p.add_argument("graph")
    p.add_argument("-k", type=int, required=True, help="palette size")
    p.add_argument("--ann", default="optimal",
                   help="degeneracy | product-col | reduction | optimal")
    p.add_argument("--ben", default="optimal", help="optimal | heuristic:<seed>")
    _add_limit_flags(p)

    p = sub.add_parser("recognize", help="family membership report")
    p.add_argument("graph")

    p = sub.add_parser("verify", help="run a theorem-replay suite")
    p.add_argument("suite", help="suite name or 'all'")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--corpus", default=None, help="JSON file with corpus overrides")
    p.add_argument("--format", choices=["json", "csv"], default="json")
    _add_limit_flags(p)

    p = sub.add_parser("serve", help="start the HTTP play service")
    p.add_argument("--port", type=int, default=8000)
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--static", default=None,
                   help="directory with the built web board (served at /)")
    _add_limit_flags(p)

    return parser


def _cmd_gen(args) -> int:
    graph, _ = _graph_arg(args.expr)
    if args.format == "g6":
        print(encode_graph6(graph))
    else:
        print(json.dumps(graph.to_json_dict()))
    return 0


def _cmd_params(args) -> int:
    graph, _ = _graph_arg(args.graph)
    print(json.dumps(param_report(graph).to_json_dict()))
    return 0


def _cmd_chi_i(args) -> int:
    graph, _ = _graph_arg(args.graph)
    result = indicated_chromatic_number(graph, args.kmax, _limits(args))
    print(json.dumps(result.to_json_dict()))
    return 0


def _cmd_play(args) -> int:
    graph, factors = _graph_arg(args.graph)
    limits = _limits(args)
    ann = make_ann_policy(args.ann, graph, args.k, limits, factors)
    ben = make_ben_policy(args.ben, graph, args.k, limits)
    transcript = play_game(graph, args.k, ann, ben)
    print(json.dumps(transcript.to_json_dict()))
    return 0


def _cmd_recognize(args) -> int:
    graph, _ = _graph_arg(args.graph)
    out = classify(graph).to_json_dict()
    out["f-family"] = family_membership_F(graph).to_json_dict()
    print(json.dumps(out))
    return 0


def _cmd_verify(args) -> int:
    corpus = None
    if args.corpus:
        with open(args.corpus, "r", encoding="utf-8") as fh:
            corpus = json.load(fh)
    names = sorted(SUITES) if args.suite == "all" else [args.suite]
    failed = 0
    for name in names:
        report = run_suite(name, corpus, _limits(args), args.seed)
        failed += report.summary["fail"]
        if args.format == "csv":
            sys.stdout.write(report.to_csv())
        else:
            print(report.to_json(include_timing=True))
    return 0 if failed == 0 else 1


def _cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app

    app = create_app(limits=_limits(args), static_dir=args.static)
    uvicorn.run(app, host=args.host, port=args.port, log_level="warning")
    return 0


_COMMANDS = {
    "gen": _cmd_gen,
    "params": _cmd_params,
    "chi-i": _cmd_chi_i,
    "play": _cmd_play,
    "recognize": _cmd_recognize,
    "verify": _cmd_verify,
    "serve": _cmd_serve,
}


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except (GraphError, PolicyError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
