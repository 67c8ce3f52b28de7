"""Command-line surface.

Subcommands: deck, recon, adv, sweep, caterpillar, family, store.  Graphs
are given as graph6 text or family grammar (P:n, S:n, K:n, Kpq:p,q, C:n,
U:k*<spec>, cat:a1,a2,..., spider:l1,l2,...).  The result store path comes
from --store or the RECONKIT_STORE environment variable.  Exit codes:
0 success, 2 a verify-claim found violations, 1 error.
"""

from __future__ import annotations

import argparse
import sys
import time

from .caterpillar import CaterpillarSeq, identifying_pair, reconstruct, reductions
from .decks import da_edeck, edge_deck, format_deck
from .families import enumerate_graphs, enumerate_trees, resolve_graph_input
from .graphs import canonical_form, write_graph6
from .recon import adv_recon_number, recon_number
from .store import default_store_path, format_witness, store_scan
from .sweep import (
    CLAIMS,
    evaluate_graph,
    sweep_caterpillars,
    sweep_disconnected,
    sweep_trees,
)

__all__ = ["main"]


class _Parser(argparse.ArgumentParser):
    # the convention here: exit code 2 is reserved for claim violations
    def error(self, message):
        self.print_usage(sys.stderr)
        raise SystemExit(f"error: {message}")


def _build_parser() -> _Parser:
    parser = _Parser(prog="reconkit", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("deck", help="print the (da-)edeck of a graph")
    p.add_argument("graph", help="graph6 or family grammar")
    p.add_argument("--da", action="store_true", help="degree-associated deck")

    p = sub.add_parser("recon", help="reconstruction numbers")
    p.add_argument("graph")
    p.add_argument(
        "--which",
        choices=["ern", "dern", "adv-ern", "adv-dern", "all"],
        default="dern",
    )

    p = sub.add_parser("adv", help="adversary reconstruction number")
    p.add_argument("graph")
    p.add_argument("--da", action="store_true")

    p = sub.add_parser("sweep", help="evaluate a claim over a family")
    scope = p.add_mutually_exclusive_group(required=True)
    scope.add_argument("--trees", type=int, metavar="N")
    scope.add_argument("--caterpillars", type=int, metavar="N")
    scope.add_argument(
        "--disconnected", metavar="K:MAXH", help="kH over connected H, n(H)<=MAXH"
    )
    p.add_argument("--claim", required=True, choices=sorted(CLAIMS))
    p.add_argument("--store", default=None, help="store path (default from env)")
    p.add_argument("--no-store", action="store_true", help="do not persist records")
    p.add_argument("--force", action="store_true", help="override size caps")
    p.add_argument("--limit", type=int, default=None, help=argparse.SUPPRESS)

    p = sub.add_parser("caterpillar", help="sequence calculus")
    csub = p.add_subparsers(dest="action", required=True)
    c = csub.add_parser("reconstruct", help="sequences consistent with two reductions")
    c.add_argument("r1")
    c.add_argument("r2")
    c = csub.add_parser("pair", help="identifying reduction positions")
    c.add_argument("seq")

    p = sub.add_parser("family", help="generate or list graphs")
    fsub = p.add_subparsers(dest="action", required=True)
    f = fsub.add_parser("gen", help="print the graph6 of a family spec")
    f.add_argument("spec")
    f = fsub.add_parser("list", help="enumerate trees or graphs")
    f.add_argument("what", choices=["trees", "graphs"])
    f.add_argument("n", type=int)
    f.add_argument("--edges", type=int, default=None)

    p = sub.add_parser("store", help="inspect the result store")
    ssub = p.add_subparsers(dest="action", required=True)
    s = ssub.add_parser("scan", help="print store records")
    s.add_argument("--filter", default=None, help="e.g. 'dern>=3'")
    s.add_argument("--store", default=None)

    return parser


def _fmt(value) -> str:
    return "indet" if value is None else str(value)


def _cmd_deck(args) -> int:
    g = resolve_graph_input(args.graph)
    deck = da_edeck(g) if args.da else edge_deck(g)
    for line in format_deck(deck):
        print(line)
    return 0


def _print_result(name: str, result) -> None:
    print(f"{name} = {_fmt(result.value)}")
    print(f"witness: {format_witness(result.witness)}")
    print(f"max shared with a blocker: {result.max_shared}")
    if result.blocker_example is not None:
        print(f"blocker example: {canonical_form(result.blocker_example).canon}")


def _cmd_recon(args) -> int:
    g = resolve_graph_input(args.graph)
    t0 = time.perf_counter()
    if args.which == "all":
        rec = evaluate_graph(g)
        print(
            f"{rec.g6}\t{rec.n}\t{rec.m}\t{_fmt(rec.ern)}\t{_fmt(rec.dern)}"
            f"\t{_fmt(rec.adv_ern)}\t{_fmt(rec.adv_dern)}\t{rec.witness}"
            f"\t{rec.elapsed_ms}"
        )
        return 0
    which = args.which
    cert = canonical_form(g)
    print(f"graph: {cert.canon}  n={g.n} m={g.m}")
    if which == "ern":
        _print_result("ern", recon_number(g, da=False))
    elif which == "dern":
        _print_result("dern", recon_number(g, da=True))
    elif which == "adv-ern":
        _print_result("adv-ern", adv_recon_number(g, da=False))
    else:
        _print_result("adv-dern", adv_recon_number(g, da=True))
    print(f"elapsed: {int((time.perf_counter() - t0) * 1000)} ms")
    return 0


def _cmd_adv(args) -> int:
    g = resolve_graph_input(args.graph)
    cert = canonical_form(g)
    print(f"graph: {cert.canon}  n={g.n} m={g.m}")
    name = "adv-dern" if args.da else "adv-ern"
    _print_result(name, adv_recon_number(g, da=args.da))
    return 0


def _cmd_sweep(args) -> int:
    store_path = None if args.no_store else (args.store or default_store_path())
    if args.trees is not None:
        report = sweep_trees(args.trees, args.claim, store_path, args.force, args.limit)
    elif args.caterpillars is not None:
        report = sweep_caterpillars(
            args.caterpillars, args.claim, store_path, args.force, args.limit
        )
    else:
        k_text, _, maxh_text = args.disconnected.partition(":")
        report = sweep_disconnected(
            int(k_text), int(maxh_text), args.claim, store_path, args.force, args.limit
        )
    for line in report.lines():
        print(line)
    return 2 if report.failed else 0


def _cmd_caterpillar(args) -> int:
    if args.action == "reconstruct":
        result = reconstruct(CaterpillarSeq.parse(args.r1), CaterpillarSeq.parse(args.r2))
        for s in sorted(result, key=lambda s: s.a):
            print(s)
        return 0
    s = CaterpillarSeq.parse(args.seq)
    i, j = identifying_pair(s)
    print(f"positions: {i},{j}")
    by_pos = {r.pos: r.seq for r in reductions(s)}
    print(f"reductions: <{by_pos[i]}>  <{by_pos[j]}>")
    return 0


def _cmd_family(args) -> int:
    if args.action == "gen":
        g = resolve_graph_input(args.spec)
        print(write_graph6(g))
        return 0
    gen = (
        enumerate_trees(args.n)
        if args.what == "trees"
        else enumerate_graphs(args.n, args.edges)
    )
    count = 0
    for g in gen:
        if args.what == "trees" or args.edges is None or g.m == args.edges:
            print(canonical_form(g).canon)
            count += 1
    print(f"total: {count}", file=sys.stderr)
    return 0


def _cmd_store(args) -> int:
    path = args.store or default_store_path()
    records, stats = store_scan(path, args.filter)
    if stats["corrupt"]:
        print(f"warning: skipped {stats['corrupt']} corrupt lines", file=sys.stderr)
    if stats["duplicates"]:
        print(
            f"warning: {stats['duplicates']} duplicate certificates (last wins)",
            file=sys.stderr,
        )
    for rec in records:
        print(
            f"{rec.g6}\t{rec.n}\t{rec.m}\t{_fmt(rec.ern)}\t{_fmt(rec.dern)}"
            f"\t{_fmt(rec.adv_ern)}\t{_fmt(rec.adv_dern)}\t{rec.witness}"
            f"\t{rec.elapsed_ms}"
        )
    return 0


_COMMANDS = {
    "deck": _cmd_deck,
    "recon": _cmd_recon,
    "adv": _cmd_adv,
    "sweep": _cmd_sweep,
    "caterpillar": _cmd_caterpillar,
    "family": _cmd_family,
    "store": _cmd_store,
}


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return _COMMANDS[args.command](args)
    except SystemExit as exc:
        if isinstance(exc.code, str):
            print(exc.code, file=sys.stderr)
            return 1
        return exc.code or 0
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
