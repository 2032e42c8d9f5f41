"""Command-line interface.

Subcommands:
  index   indices, radius, and class of one graph
  check   evaluate bound claims on one graph
  sweep   run claims over an exhaustively enumerated family
  lemma2  exact grid minimization of the cycle-edge deletion bound
  reduce  delete cycle edges down to a spanning unicyclic subgraph

Graphs are given as --g6 STRING (graph6) or --edges FILE (edge-list
text).  Reports print to stdout as JSON; --csv PATH additionally writes
a flat CSV.  Exit codes: 0 success with no violations, 1 usage or input
error, 2 a checked claim was violated.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional

from . import reporting
from .bounds import (
    CLAIMS,
    ClaimDomainError,
    applicable_claims,
    check_claim,
    minimize_cycle_deletion_bound,
)
from .families import FAMILY_CAPS, Family, FamilySpec
from .formats import FormatError, parse_edge_list, parse_graph6, to_graph6
from .graphs import (
    DisconnectedGraphError,
    Graph,
    GraphError,
    cyclomatic_number,
    distance_profile,
    is_connected,
)
from .indices import harmonic_index, index_report
from .reporting import ReportEnvelope
from .sweep import FAMILY_CLAIMS, sweep
from .transforms import find_cycle_edge, unicyclic_reduction


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on bad usage; the exit-code contract
    # reserves 2 for violations, so remap usage failures to an exception.
    def error(self, message):
        raise _UsageError(message)


def _build_parser() -> _Parser:
    parser = _Parser(prog="harmrad", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add_graph_args(p):
        p.add_argument("--g6", metavar="STRING", help="graph6-encoded graph")
        p.add_argument("--edges", metavar="FILE", help="edge-list file (n m, then u v lines)")

    def add_csv(p):
        p.add_argument("--csv", metavar="PATH", help="also write a flat CSV report")

    p = sub.add_parser("index", help="indices, radius, and class of one graph")
    add_graph_args(p)
    add_csv(p)

    p = sub.add_parser("check", help="evaluate bound claims on one graph")
    add_graph_args(p)
    p.add_argument(
        "--claims",
        metavar="LIST",
        help=f"comma-separated claims (default: all applicable; known: {','.join(CLAIMS)})",
    )
    add_csv(p)

    p = sub.add_parser("sweep", help="run claims over an enumerated family")
    p.add_argument(
        "--family",
        required=True,
        choices=[f.value for f in Family],
        help="graph family to enumerate",
    )
    p.add_argument("--n", required=True, type=int, help="vertex count")
    p.add_argument("--claims", required=True, metavar="LIST", help="comma-separated claims")
    p.add_argument("--dedup", action="store_true", help="one representative per isomorphism class")
    p.add_argument("--jobs", type=int, default=1, help="worker processes (default 1)")
    p.add_argument(
        "--allow-large",
        action="store_true",
        help=f"override the per-family caps {({f.value: c for f, c in FAMILY_CAPS.items()})}",
    )
    add_csv(p)

    p = sub.add_parser("lemma2", help="exact minimization of the deletion bound grid")
    p.add_argument("--xmax", type=int, default=1000, help="grid bound for x (default 1000)")
    p.add_argument("--ymax", type=int, default=1000, help="grid bound for y (default 1000)")
    add_csv(p)

    p = sub.add_parser("reduce", help="cycle-edge deletion trace down to unicyclic")
    add_graph_args(p)
    add_csv(p)

    return parser


def _load_graph(args) -> Graph:
    if (args.g6 is None) == (args.edges is None):
        raise _UsageError("provide exactly one of --g6 or --edges")
    if args.g6 is not None:
        return parse_graph6(args.g6)
    with open(args.edges, encoding="utf-8") as fh:
        return parse_edge_list(fh.read())


def _emit(env: ReportEnvelope, csv_text: Optional[str], csv_path: Optional[str]) -> None:
    print(reporting.envelope_to_json(env))
    if csv_path:
        with open(csv_path, "w", encoding="utf-8") as fh:
            fh.write(csv_text or "")


def _cmd_index(args) -> int:
    g = _load_graph(args)
    if not is_connected(g):
        raise _UsageError("index requires a connected graph")
    rep = index_report(g)
    g6 = to_graph6(g)
    env = ReportEnvelope("index", {"graph6": g6}, rep)
    _emit(env, reporting.index_csv(g6, g.n, g.m, rep), args.csv)
    return 0


def _cmd_check(args) -> int:
    g = _load_graph(args)
    if not is_connected(g):
        raise _UsageError("check requires a connected graph")
    if args.claims:
        claims = [c.strip() for c in args.claims.split(",") if c.strip()]
        unknown = [c for c in claims if c not in CLAIMS]
        if unknown:
            raise _UsageError(f"unknown claims: {', '.join(unknown)}")
    else:
        claims = applicable_claims(g)
    results = [check_claim(c, g) for c in claims]
    g6 = to_graph6(g)
    env = ReportEnvelope("check", {"graph6": g6, "claims": claims}, results)
    _emit(env, reporting.check_csv(g6, results), args.csv)
    return 2 if any(r.status == "violated" for r in results) else 0


def _cmd_sweep(args) -> int:
    family = Family(args.family)
    claims = [c.strip() for c in args.claims.split(",") if c.strip()]
    unknown = [c for c in claims if c not in CLAIMS]
    if unknown:
        raise _UsageError(f"unknown claims: {', '.join(unknown)}")
    bad = [c for c in claims if c not in FAMILY_CLAIMS[family]]
    if bad:
        raise _UsageError(
            f"claims not applicable to family {family.value}: {', '.join(bad)}"
        )
    spec = FamilySpec(family, args.n, dedup=args.dedup, allow_large=args.allow_large)
    report = sweep(spec, claims, jobs=max(1, args.jobs))
    # jobs deliberately not echoed: reports are byte-identical across worker counts
    inputs = {
        "family": family.value,
        "n": args.n,
        "dedup": args.dedup,
        "claims": claims,
    }
    env = ReportEnvelope("sweep", inputs, report)
    _emit(env, reporting.sweep_csv(report), args.csv)
    return 2 if report.violations else 0


def _cmd_lemma2(args) -> int:
    argmin, minimum = minimize_cycle_deletion_bound(args.xmax, args.ymax)
    res = {
        "x_max": args.xmax,
        "y_max": args.ymax,
        "argmin": argmin,
        "minimum": minimum,
    }
    env = ReportEnvelope("lemma2", {"x_max": args.xmax, "y_max": args.ymax}, res)
    _emit(env, reporting.lemma2_csv(res), args.csv)
    return 0


def _cmd_reduce(args) -> int:
    g = _load_graph(args)
    if not is_connected(g):
        raise _UsageError("reduce requires a connected graph")
    steps = [
        {
            "step": 0,
            "deleted_edge": None,
            "n": g.n,
            "m": g.m,
            "cyclomatic": cyclomatic_number(g),
            "harmonic": harmonic_index(g),
            "radius": distance_profile(g).radius,
        }
    ]
    current = g
    for i, reduced in enumerate(unicyclic_reduction(g), start=1):
        steps.append(
            {
                "step": i,
                "deleted_edge": find_cycle_edge(current),
                "n": reduced.n,
                "m": reduced.m,
                "cyclomatic": cyclomatic_number(reduced),
                "harmonic": harmonic_index(reduced),
                "radius": distance_profile(reduced).radius,
            }
        )
        current = reduced
    env = ReportEnvelope("reduce", {"graph6": to_graph6(g)}, steps)
    _emit(env, reporting.reduce_csv(steps), args.csv)
    return 0


_COMMANDS = {
    "index": _cmd_index,
    "check": _cmd_check,
    "sweep": _cmd_sweep,
    "lemma2": _cmd_lemma2,
    "reduce": _cmd_reduce,
}


def main(argv: Optional[list[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return _COMMANDS[args.command](args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (FormatError, GraphError, DisconnectedGraphError, ClaimDomainError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def console_entry() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    console_entry()
